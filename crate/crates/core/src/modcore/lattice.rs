//! Exhaustive submodule lattices.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::module::{ModulePresentation, Submodule};
use crate::error::Result;

pub const DEFAULT_VECTOR_CAP: u64 = 1 << 16;

/// Every submodule of `m`, duplicate-free, ordered by
/// `(dimension, lexicographic canonical basis)`.
///
/// Fixpoint of: start from `{0}`; for each known `W` and vector `v`, add the
/// closure of `W ∪ {v}`. Requires `p^dim <= cap`.
pub fn enumerate_submodules(m: &ModulePresentation, cap: u64) -> Result<Vec<Submodule>> {
    super::module::vector_count(m, cap, "submodule enumeration")?;
    let mut seen: BTreeSet<Submodule> = BTreeSet::new();
    let zero = m.zero_submodule();
    seen.insert(zero.clone());
    let mut queue = vec![zero];
    while let Some(w) = queue.pop() {
        let mut tried: HashSet<Vec<u8>> = HashSet::new();
        for v in m.full_submodule().projective_elements() {
            let r = w.reduce(&v);
            if r.iter().all(|&x| x == 0) || !tried.insert(normalize(&r, m.p())) {
                continue;
            }
            let c = m.grow(w.clone(), &[v]);
            if seen.insert(c.clone()) {
                queue.push(c);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn normalize(v: &[u8], p: u32) -> Vec<u8> {
    let mut out = v.to_vec();
    if let Some(&lead) = out.iter().rev().find(|&&x| x != 0) {
        let f = super::matrix::inv(lead, p);
        super::matrix::scale(&mut out, f, p);
    }
    out
}

/// A fully enumerated submodule lattice with index lookups.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    module: ModulePresentation,
    elements: Vec<Submodule>,
    index: HashMap<Submodule, usize>,
}

impl SubmoduleLattice {
    pub fn new(m: &ModulePresentation, cap: u64) -> Result<Self> {
        let elements = enumerate_submodules(m, cap)?;
        let index = elements.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Self {
            module: m.clone(),
            elements,
            index,
        })
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn elements(&self) -> &[Submodule] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Indices of the submodules `K` with `lower ⊆ K ⊆ upper`.
    pub fn interval(&self, lower: &Submodule, upper: &Submodule) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| {
                let k = &self.elements[i];
                lower.is_subspace_of(k) && k.is_subspace_of(upper)
            })
            .collect()
    }

    pub fn above(&self, lower: &Submodule) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| lower.is_subspace_of(&self.elements[i]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::{fixtures, Subspace};

    fn sub(p: u32, m: usize, vs: &[Vec<u8>]) -> Submodule {
        Submodule::from_invariant(Subspace::span(p, m, vs).unwrap())
    }

    #[test]
    fn local_fixture_has_three_submodules() {
        let b = fixtures::local();
        let l = enumerate_submodules(&b, DEFAULT_VECTOR_CAP).unwrap();
        assert_eq!(l, vec![b.zero_submodule(), sub(2, 2, &[vec![1, 0]]), b.full_submodule()]);
    }

    #[test]
    fn split_fixture_lattice_in_order() {
        let c = fixtures::split();
        let l = enumerate_submodules(&c, DEFAULT_VECTOR_CAP).unwrap();
        assert_eq!(
            l,
            vec![
                c.zero_submodule(),
                sub(2, 2, &[vec![1, 0]]),
                sub(2, 2, &[vec![0, 1]]),
                c.full_submodule()
            ]
        );
    }

    #[test]
    fn trivial_action_gives_all_subspaces() {
        let m = ModulePresentation::new(2, 2, vec![], "F2^2").unwrap();
        assert_eq!(enumerate_submodules(&m, DEFAULT_VECTOR_CAP).unwrap().len(), 5);
        let m3 = ModulePresentation::new(3, 3, vec![], "F3^3").unwrap();
        // 1 + 13 + 13 + 1 subspaces of F_3^3
        assert_eq!(enumerate_submodules(&m3, DEFAULT_VECTOR_CAP).unwrap().len(), 28);
    }

    #[test]
    fn cap_is_enforced() {
        let m = ModulePresentation::new(2, 5, vec![], "F2^5").unwrap();
        let err = enumerate_submodules(&m, 16).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn zero_module_lattice() {
        let m = ModulePresentation::new(2, 0, vec![], "0").unwrap();
        assert_eq!(enumerate_submodules(&m, DEFAULT_VECTOR_CAP).unwrap().len(), 1);
    }
}
