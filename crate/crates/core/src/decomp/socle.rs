//! Socles, essentiality and uniform dimension for finite-length modules.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::modcore::{matrix, ModulePresentation, Submodule, DEFAULT_VECTOR_CAP};

/// All minimal nonzero submodules, in canonical order.
///
/// Scans the cyclic submodules `closure({v})`; one is minimal iff every
/// nonzero element of it generates it again.
pub fn minimal_submodules(m: &ModulePresentation) -> Result<Vec<Submodule>> {
    matrix::check_space(m.p(), m.dim(), DEFAULT_VECTOR_CAP, "socle")?;
    let mut verdict: HashMap<Submodule, bool> = HashMap::new();
    let mut found = BTreeSet::new();
    for v in matrix::projective_vectors(m.p(), m.dim()) {
        let c = m.closure(&[v])?;
        let minimal = match verdict.get(&c) {
            Some(&b) => b,
            None => {
                let b = c
                    .projective_elements()
                    .all(|w| m.grow(m.zero_submodule(), &[w]) == c);
                verdict.insert(c.clone(), b);
                b
            }
        };
        if minimal {
            found.insert(c);
        }
    }
    Ok(found.into_iter().collect())
}

pub fn socle(m: &ModulePresentation) -> Result<Submodule> {
    let mut acc = m.zero_submodule();
    for s in minimal_submodules(m)? {
        acc = m.sum(&acc, &s)?;
    }
    Ok(acc)
}

/// The default socle decomposition: greedy over the minimal submodules in
/// canonical order, keeping each one whose sum with the previous picks stays
/// direct.
fn greedy_socle_decomposition(m: &ModulePresentation) -> Result<Vec<Submodule>> {
    let mut picked = Vec::new();
    let mut acc = m.zero_submodule();
    for s in minimal_submodules(m)? {
        let next = m.sum(&acc, &s)?;
        if next.dim() == acc.dim() + s.dim() {
            acc = next;
            picked.push(s);
        }
    }
    Ok(picked)
}

/// Every way of writing the socle as a direct sum of minimal submodules, as
/// index-increasing selections from the canonical minimal list. Index 0 is
/// the greedy choice.
pub fn socle_decompositions(m: &ModulePresentation, cap: u64) -> Result<Vec<Vec<Submodule>>> {
    let minimal = minimal_submodules(m)?;
    let mut total = m.zero_submodule();
    for s in &minimal {
        total = m.sum(&total, s)?;
    }
    let target = total.dim();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_selection(m, &minimal, 0, &m.zero_submodule(), target, &mut chosen, &mut out, cap)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_selection(
    m: &ModulePresentation,
    minimal: &[Submodule],
    from: usize,
    acc: &Submodule,
    target: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<Submodule>>,
    cap: u64,
) -> Result<()> {
    if acc.dim() == target {
        if out.len() as u64 >= cap {
            return Err(Error::resource("socle decompositions", out.len() as u128 + 1, cap as u128));
        }
        out.push(chosen.iter().map(|&i| minimal[i].clone()).collect());
        return Ok(());
    }
    for i in from..minimal.len() {
        let next = m.sum(acc, &minimal[i])?;
        if next.dim() == acc.dim() + minimal[i].dim() {
            chosen.push(i);
            extend_selection(m, minimal, i + 1, &next, target, chosen, out, cap)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Simples `S_1, ..., S_n` with `S_1 ⊕ ... ⊕ S_n = socle(m)`. `choice = 0`
/// is the greedy default; other indices select from
/// [`socle_decompositions`].
pub fn socle_decomposition(m: &ModulePresentation, choice: usize) -> Result<Vec<Submodule>> {
    if choice == 0 {
        return greedy_socle_decomposition(m);
    }
    let all = socle_decompositions(m, u64::MAX)?;
    all.into_iter().nth(choice).ok_or_else(|| {
        Error::Precondition(format!("socle decomposition choice {choice} out of range"))
    })
}

/// Finite-length criterion: `N ⊆_e M` iff `soc(M) ⊆ N`.
pub fn is_essential(m: &ModulePresentation, n: &Submodule) -> Result<bool> {
    m.check_submodule(n)?;
    Ok(socle(m)?.is_subspace_of(n))
}

pub fn uniform_dimension(m: &ModulePresentation) -> Result<usize> {
    Ok(greedy_socle_decomposition(m)?.len())
}

pub fn is_uniform(m: &ModulePresentation) -> Result<bool> {
    Ok(m.dim() > 0 && uniform_dimension(m)? == 1)
}
