//! Complements: submodules `C ⊇ L` maximal with `N ∩ C = 0`.

use crate::error::{Error, Result};
use crate::modcore::{matrix, ModulePresentation, Submodule, SubmoduleLattice, DEFAULT_VECTOR_CAP};

/// The deterministic complement to `n` containing `l`: start from `l` and
/// absorb every vector (canonical order) whose addition keeps the
/// intersection with `n` trivial. A single pass reaches the fixpoint, since
/// a vector rejected against a smaller `C` stays rejected as `C` grows.
pub fn complement(m: &ModulePresentation, n: &Submodule, l: &Submodule) -> Result<Submodule> {
    m.check_submodule(n)?;
    m.check_submodule(l)?;
    if !m.intersect(n, l)?.is_zero() {
        return Err(Error::Precondition(format!("complement: {n} ∩ {l} ≠ 0")));
    }
    matrix::check_space(m.p(), m.dim(), DEFAULT_VECTOR_CAP, "complement")?;
    let mut c = l.clone();
    for v in matrix::projective_vectors(m.p(), m.dim()) {
        if c.contains(&v) {
            continue;
        }
        let bigger = m.grow(c.clone(), &[v]);
        if m.intersect(&bigger, n)?.is_zero() {
            c = bigger;
        }
    }
    Ok(c)
}

/// Every complement to `n` containing `l`, in canonical order.
pub fn enumerate_complements(
    m: &ModulePresentation,
    n: &Submodule,
    l: &Submodule,
    cap: u64,
) -> Result<Vec<Submodule>> {
    m.check_submodule(n)?;
    m.check_submodule(l)?;
    if !m.intersect(n, l)?.is_zero() {
        return Err(Error::Precondition(format!("complement: {n} ∩ {l} ≠ 0")));
    }
    let lattice = SubmoduleLattice::new(m, cap)?;
    let zero = m.zero_submodule();
    Ok(complements_over(&lattice, &zero, n, l)?
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect())
}

/// Lattice indices of the submodules `K ⊇ r` with `K ∩ w = base` that are
/// maximal with that property; this is the complement to `w / base`
/// containing `r / base` inside `M / base`.
pub(crate) fn complements_over(
    lattice: &SubmoduleLattice,
    base: &Submodule,
    w: &Submodule,
    r: &Submodule,
) -> Result<Vec<usize>> {
    let mut candidates = Vec::new();
    for (i, k) in lattice.elements().iter().enumerate() {
        if r.is_subspace_of(k) && k.intersect(w)? == *base.subspace() {
            candidates.push(i);
        }
    }
    Ok(candidates
        .iter()
        .copied()
        .filter(|&i| {
            let k = lattice.get(i);
            !candidates
                .iter()
                .any(|&j| j != i && k.is_subspace_of(lattice.get(j)))
        })
        .collect())
}
