//! Exhaustive search for decompositions, straight from the definitions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::defs::LatticeOracle;
use crate::error::{Error, Result};
use crate::modcore::Submodule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BruteKind {
    /// Every family of primary parts intersecting to `N`.
    Primary,
    IrredundantPrimary,
    ShortestPrimary,
    MaximalShortestPrimary,
    /// Every family of parts with uniform quotients intersecting to `N`.
    Uniform,
    IrredundantUniform,
    ShortestUniform,
    MaximalShortestUniform,
}

impl BruteKind {
    pub const ALL: [BruteKind; 8] = [
        BruteKind::Primary,
        BruteKind::IrredundantPrimary,
        BruteKind::ShortestPrimary,
        BruteKind::MaximalShortestPrimary,
        BruteKind::Uniform,
        BruteKind::IrredundantUniform,
        BruteKind::ShortestUniform,
        BruteKind::MaximalShortestUniform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BruteKind::Primary => "primary",
            BruteKind::IrredundantPrimary => "irredundant_primary",
            BruteKind::ShortestPrimary => "shortest_primary",
            BruteKind::MaximalShortestPrimary => "maximal_shortest_primary",
            BruteKind::Uniform => "uniform",
            BruteKind::IrredundantUniform => "irredundant_uniform",
            BruteKind::ShortestUniform => "shortest_uniform",
            BruteKind::MaximalShortestUniform => "maximal_shortest_uniform",
        }
    }

    fn uniform(self) -> bool {
        matches!(
            self,
            BruteKind::Uniform
                | BruteKind::IrredundantUniform
                | BruteKind::ShortestUniform
                | BruteKind::MaximalShortestUniform
        )
    }
}

impl fmt::Display for BruteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BruteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BruteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown decomposition kind {s:?}")))
    }
}

/// A decomposition as its sorted, duplicate-free list of lattice indices.
pub type IndexSet = Vec<usize>;

/// Proper submodules `K ⊇ N` whose quotient `M/K` is primary (one
/// associated prime) or uniform, by definition.
pub fn candidates(o: &mut LatticeOracle, base: usize, uniform: bool) -> Result<Vec<usize>> {
    let top = o.top();
    let mut out = Vec::new();
    for k in 0..o.len() {
        if k == top || !o.le(base, k) {
            continue;
        }
        let ok = if uniform {
            o.is_uniform(k, top)
        } else {
            o.primes(k, top)?.len() == 1
        };
        if ok {
            out.push(k);
        }
    }
    Ok(out)
}

struct Walk<'o> {
    o: &'o LatticeOracle,
    base: usize,
    cands: Vec<usize>,
    irredundant_only: bool,
    steps: u64,
    cap: u64,
    found: Vec<IndexSet>,
}

impl Walk<'_> {
    fn go(&mut self, from: usize, chosen: &mut Vec<usize>, acc: usize) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::resource("brute-force subset search", self.steps as u128, self.cap as u128));
        }
        if !chosen.is_empty() && acc == self.base {
            if !self.irredundant_only || self.o.is_irredundant(self.base, chosen) {
                self.found.push(chosen.clone());
            }
            if self.irredundant_only {
                return Ok(());
            }
        }
        for i in from..self.cands.len() {
            let k = self.cands[i];
            let next = self.o.meet(acc, k);
            // adding a part that does not shrink the running intersection
            // makes that part redundant
            if self.irredundant_only && next == acc {
                continue;
            }
            chosen.push(k);
            self.go(i + 1, chosen, next)?;
            chosen.pop();
        }
        Ok(())
    }
}

fn walk(o: &LatticeOracle, base: usize, cands: Vec<usize>, irredundant_only: bool, cap: u64) -> Result<Vec<IndexSet>> {
    let mut w = Walk {
        o,
        base,
        cands,
        irredundant_only,
        steps: 0,
        cap,
        found: Vec::new(),
    };
    let top = o.top();
    w.go(0, &mut Vec::new(), top)?;
    Ok(w.found)
}

fn shortest(all: Vec<IndexSet>) -> Vec<IndexSet> {
    let Some(min) = all.iter().map(Vec::len).min() else {
        return Vec::new();
    };
    all.into_iter().filter(|d| d.len() == min).collect()
}

/// `big` enlarges `small` partwise: some bijection pairs every part of
/// `small` with a part of `big` containing it.
fn dominates(o: &LatticeOracle, big: &[usize], small: &[usize]) -> bool {
    fn assign(o: &LatticeOracle, big: &[usize], small: &[usize], used: &mut Vec<bool>, i: usize) -> bool {
        if i == small.len() {
            return true;
        }
        for j in 0..big.len() {
            if !used[j] && o.le(small[i], big[j]) {
                used[j] = true;
                if assign(o, big, small, used, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    big.len() == small.len() && assign(o, big, small, &mut vec![false; big.len()], 0)
}

/// Shortest decompositions that no other one of the same kind enlarges
/// partwise. An enlargement keeps the number of parts, so it is itself
/// shortest and appears in `short`.
fn maximal(o: &LatticeOracle, short: Vec<IndexSet>) -> Vec<IndexSet> {
    short
        .iter()
        .filter(|d| !short.iter().any(|e| e != *d && dominates(o, e, d)))
        .cloned()
        .collect()
}

/// Decompositions of `base` of the given kind, as sorted lattice-index sets
/// in canonical order.
pub fn brute_force_indices(o: &mut LatticeOracle, base: usize, kind: BruteKind, cap: u64) -> Result<Vec<IndexSet>> {
    if base == o.top() {
        return Err(Error::NotProper);
    }
    let cands = candidates(o, base, kind.uniform())?;
    let found = match kind {
        BruteKind::Primary | BruteKind::Uniform => walk(o, base, cands, false, cap)?,
        BruteKind::IrredundantPrimary | BruteKind::IrredundantUniform => walk(o, base, cands, true, cap)?,
        BruteKind::ShortestPrimary | BruteKind::ShortestUniform => shortest(walk(o, base, cands, true, cap)?),
        BruteKind::MaximalShortestPrimary | BruteKind::MaximalShortestUniform => {
            maximal(o, shortest(walk(o, base, cands, true, cap)?))
        }
    };
    let canonical: BTreeSet<Vec<Submodule>> = found
        .into_iter()
        .map(|d| {
            let mut parts: Vec<Submodule> = d.iter().map(|&i| o.get(i).clone()).collect();
            parts.sort();
            parts
        })
        .collect();
    Ok(canonical
        .into_iter()
        .map(|parts| {
            parts
                .iter()
                .map(|s| o.index_of(s).expect("lattice element"))
                .collect()
        })
        .collect())
}

/// Decompositions of `base` of the given kind, each a canonically sorted
/// list of submodules; the list itself is in canonical order.
pub fn brute_force_decompositions(
    o: &mut LatticeOracle,
    base: &Submodule,
    kind: BruteKind,
    cap: u64,
) -> Result<Vec<Vec<Submodule>>> {
    let b = o
        .index_of(base)
        .ok_or_else(|| Error::NotSubmodule(format!("{base} is not a submodule")))?;
    Ok(brute_force_indices(o, b, kind, cap)?
        .into_iter()
        .map(|d| d.into_iter().map(|i| o.get(i).clone()).collect())
        .collect())
}
