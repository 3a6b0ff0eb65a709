//! Lattice-backed view of `M / N` shared by the enumerators and the checker.
//!
//! Submodules of `M / N` are handled through their preimages, i.e. the
//! lattice elements of `M` containing `N`.

use std::collections::HashMap;

use super::primes::{AssociatedPrimes, PrimeContext};
use crate::error::Result;
use crate::modcore::{quotient, ModulePresentation, Submodule, SubmoduleLattice, Subspace};
use crate::Caps;

pub(crate) struct Workspace {
    pub n: Submodule,
    pub n_idx: usize,
    pub lattice: SubmoduleLattice,
    /// Lattice indices of the submodules containing `N`.
    pub above: Vec<usize>,
    /// `As(W / N)` for `W ⊇ N`.
    sub_primes: HashMap<usize, AssociatedPrimes>,
    /// `As(M / K)` for `K ⊇ N`.
    quo_primes: HashMap<usize, AssociatedPrimes>,
}

impl Workspace {
    pub fn new(m: &ModulePresentation, n: &Submodule, caps: &Caps) -> Result<Self> {
        let lattice = SubmoduleLattice::new(m, caps.vectors)?;
        let n_idx = lattice
            .index_of(n)
            .ok_or_else(|| crate::Error::NotSubmodule(format!("{n} is not a submodule")))?;
        let q = quotient(m, n)?;
        let mut ctx = PrimeContext::for_module(&q.module)?;
        let above = lattice.above(n);
        let mut sub_primes = HashMap::new();
        let mut quo_primes = HashMap::new();
        for &k in &above {
            let kk = lattice.get(k);
            let sq = m.subquotient(kk, n)?;
            sub_primes.insert(k, ctx.associated_left_primes(&sq)?);
        }
        for &k in &above {
            let kk = lattice.get(k);
            quo_primes.insert(k, ctx.quotient_primes(m, kk)?);
        }
        Ok(Self {
            n: n.clone(),
            n_idx,
            lattice,
            above,
            sub_primes,
            quo_primes,
        })
    }

    pub fn get(&self, i: usize) -> &Submodule {
        self.lattice.get(i)
    }

    pub fn sub_primes(&self, w: usize) -> &AssociatedPrimes {
        &self.sub_primes[&w]
    }

    pub fn quo_primes(&self, k: usize) -> &AssociatedPrimes {
        &self.quo_primes[&k]
    }

    /// `As(M / N)`.
    pub fn top_primes(&self) -> &AssociatedPrimes {
        &self.quo_primes[&self.n_idx]
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.lattice.index_of(s)
    }

    /// `N + Σ parts` as a subspace.
    pub fn sum_of(&self, parts: &[usize]) -> Result<Subspace> {
        let mut acc = self.n.subspace().clone();
        for &i in parts {
            acc = acc.sum(self.get(i))?;
        }
        Ok(acc)
    }

    pub fn intersection_of(&self, parts: &[usize]) -> Result<Subspace> {
        let mut acc = self.lattice.get(self.lattice.top()).subspace().clone();
        for &i in parts {
            acc = acc.intersect(self.get(i))?;
        }
        Ok(acc)
    }

    /// True when no single part can be enlarged while keeping the
    /// intersection equal to `N` and the part's kind (`same_kind` compares
    /// the old and the new part). Enlarging several parts at once implies
    /// a single enlargement works, so this is the full maximality test.
    pub fn is_maximal(&self, parts: &[usize], same_kind: impl Fn(usize, usize) -> bool) -> Result<bool> {
        for (i, &part) in parts.iter().enumerate() {
            for &k in &self.above {
                if k == part || !self.get(part).is_subspace_of(self.get(k)) || !same_kind(part, k) {
                    continue;
                }
                let mut swapped = parts.to_vec();
                swapped[i] = k;
                if self.intersection_of(&swapped)? == *self.n.subspace() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
