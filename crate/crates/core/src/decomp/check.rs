//! Verification of a user-supplied family of parts.

use super::construct::{same_kind, Kind};
use super::primes::{require_proper, AssociatedPrimes, PrimeContext};
use super::workspace::Workspace;
use crate::error::{Error, Result};
use crate::modcore::{quotient, ModulePresentation, Submodule};
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub intersects_to_base: bool,
    /// `As(M / N_i)` per part (empty for a part equal to `M`).
    pub part_primes: Vec<AssociatedPrimes>,
    /// `As(M / N)`.
    pub base_primes: AssociatedPrimes,
    /// `u.dim(M / N)`.
    pub udim: usize,
    /// Intersects to `N` and every `M / N_i` has a single prime.
    pub is_primary_decomposition: bool,
    /// `U_i = ∩_{j≠i} N_j`.
    pub cofactors: Vec<Submodule>,
    /// Every cofactor strictly contains `N`.
    pub is_irredundant: bool,
    /// The cofactors `U_i / N` sum directly in `M / N`.
    pub cofactor_sum_direct: bool,
    pub is_shortest_primary: bool,
    /// Intersects to `N` and every `M / N_i` is uniform.
    pub is_uniform_decomposition: bool,
    pub is_shortest_uniform: bool,
    /// Maximality among primary decompositions; `None` if not primary or
    /// the lattice is out of reach.
    pub maximal_primary: Option<bool>,
    pub maximal_uniform: Option<bool>,
}

/// `∩_{j≠i} parts[j]` for each `i`; the empty intersection is `M`.
pub fn cofactors(m: &ModulePresentation, parts: &[Submodule]) -> Result<Vec<Submodule>> {
    let mut out = Vec::with_capacity(parts.len());
    for i in 0..parts.len() {
        let mut acc = m.full_submodule();
        for (j, p) in parts.iter().enumerate() {
            if j != i {
                acc = m.intersect(&acc, p)?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

pub fn check_decomposition(
    m: &ModulePresentation,
    n: &Submodule,
    parts: &[Submodule],
    caps: &Caps,
) -> Result<CheckReport> {
    require_proper(m, n)?;
    if parts.is_empty() {
        return Err(Error::Input("a decomposition needs at least one part".into()));
    }
    for p in parts {
        m.check_submodule(p)?;
        if !n.is_subspace_of(p) {
            return Err(Error::Input(format!("part {p} does not contain N = {n}")));
        }
    }
    let q = quotient(m, n)?;
    let mut ctx = PrimeContext::for_module(&q.module)?;
    let base_primes = ctx.associated_left_primes(&q.module)?;
    let udim = base_primes.total();

    let mut inter = m.full_submodule();
    for p in parts {
        inter = m.intersect(&inter, p)?;
    }
    let intersects_to_base = inter == *n;

    let mut part_primes = Vec::with_capacity(parts.len());
    for p in parts {
        part_primes.push(ctx.quotient_primes(m, p)?);
    }
    let is_primary_decomposition = intersects_to_base && part_primes.iter().all(|a| a.len() == 1);
    let is_uniform_decomposition = intersects_to_base && part_primes.iter().all(|a| a.total() == 1);

    let cof = cofactors(m, parts)?;
    let is_irredundant = intersects_to_base && cof.iter().all(|u| u != n);
    let mut acc = n.clone();
    let mut excess = 0;
    for u in &cof {
        excess += u.dim() - n.dim();
        acc = m.sum(&acc, u)?;
    }
    let cofactor_sum_direct = acc.dim() - n.dim() == excess;

    let is_shortest_primary = is_primary_decomposition && parts.len() == base_primes.len();
    let is_shortest_uniform = is_uniform_decomposition && parts.len() == udim;

    let (maximal_primary, maximal_uniform) = match Workspace::new(m, n, caps) {
        Ok(ws) => {
            let idx: Vec<usize> = parts
                .iter()
                .map(|p| ws.index_of(p).expect("submodule is in the lattice"))
                .collect();
            let primary = if is_primary_decomposition {
                Some(ws.is_maximal(&idx, |a, b| same_kind(&ws, Kind::Primary, a, b))?)
            } else {
                None
            };
            let uniform = if is_uniform_decomposition {
                Some(ws.is_maximal(&idx, |a, b| same_kind(&ws, Kind::Uniform, a, b))?)
            } else {
                None
            };
            (primary, uniform)
        }
        Err(e) if e.is_resource() => (None, None),
        Err(e) => return Err(e),
    };

    Ok(CheckReport {
        intersects_to_base,
        part_primes,
        base_primes,
        udim,
        is_primary_decomposition,
        cofactors: cof,
        is_irredundant,
        cofactor_sum_direct,
        is_shortest_primary,
        is_uniform_decomposition,
        is_shortest_uniform,
        maximal_primary,
        maximal_uniform,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::{fixtures, Subspace};

    fn sub(m: &ModulePresentation, vs: &[Vec<u8>]) -> Submodule {
        m.submodule(Subspace::span(m.p(), m.dim(), vs).unwrap()).unwrap()
    }

    #[test]
    fn shortest_uniform_of_mixed_fixture() {
        let d = fixtures::mixed();
        let parts = vec![sub(&d, &[vec![0, 0, 1]]), sub(&d, &[vec![1, 0, 0], vec![0, 1, 0]])];
        let r = check_decomposition(&d, &d.zero_submodule(), &parts, &Caps::default()).unwrap();
        assert!(r.intersects_to_base);
        assert!(r.is_uniform_decomposition && r.is_shortest_uniform);
        assert!(r.is_irredundant && r.cofactor_sum_direct);
        assert!(r.is_primary_decomposition);
        assert!(!r.is_shortest_primary);
        assert_eq!(r.udim, 2);
        assert_eq!(r.maximal_uniform, Some(true));
    }

    #[test]
    fn redundant_family() {
        let d = fixtures::mixed();
        let zero = d.zero_submodule();
        let parts = vec![zero.clone(), sub(&d, &[vec![0, 0, 1]])];
        let r = check_decomposition(&d, &zero, &parts, &Caps::default()).unwrap();
        assert!(r.intersects_to_base);
        assert!(!r.is_irredundant);
        assert!(r.is_primary_decomposition && !r.is_shortest_primary);
    }

    #[test]
    fn single_primary_part() {
        let d = fixtures::mixed();
        let zero = d.zero_submodule();
        let r = check_decomposition(&d, &zero, std::slice::from_ref(&zero), &Caps::default()).unwrap();
        assert!(r.is_shortest_primary && r.is_irredundant);
        assert_eq!(r.maximal_primary, Some(true));
        assert_eq!(r.cofactors, vec![d.full_submodule()]);
    }

    #[test]
    fn non_maximal_primary_detected() {
        let d = fixtures::mixed();
        let zero = d.zero_submodule();
        let parts = vec![zero.clone(), sub(&d, &[vec![0, 0, 1]])];
        let r = check_decomposition(&d, &zero, &parts, &Caps::default()).unwrap();
        assert_eq!(r.maximal_primary, Some(false));
        assert_eq!(r.maximal_uniform, None);
    }

    #[test]
    fn part_must_contain_base() {
        let d = fixtures::mixed();
        let n = sub(&d, &[vec![0, 0, 1]]);
        let bad = sub(&d, &[vec![1, 0, 0]]);
        assert!(matches!(
            check_decomposition(&d, &n, &[bad], &Caps::default()),
            Err(Error::Input(_))
        ));
    }
}
