//! Definitional predicates over a fully enumerated submodule lattice.
//!
//! Everything here is phrased in terms of lattice elements of `M`: an
//! interval `(lower, upper]` stands for the nonzero submodules of
//! `upper / lower`. Nothing calls into the decomposition routines; simple
//! subquotients are compared by an explicit search for an invertible
//! intertwiner.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::modcore::{find_isomorphism, ModulePresentation, Submodule, SubmoduleLattice};

/// Caps applied by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest lattice the oracle will work on.
    pub lattice: usize,
    /// Upper bound on `p^dim` for lattice enumeration.
    pub vectors: u64,
    /// Upper bound on search steps.
    pub search: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            lattice: 64,
            vectors: 1 << 16,
            search: 1 << 22,
        }
    }
}

impl OracleCaps {
    pub fn with_lattice(lattice: usize) -> Self {
        Self {
            lattice,
            ..Self::default()
        }
    }

    pub fn caps(&self) -> crate::Caps {
        crate::Caps {
            vectors: self.vectors,
            search: self.search,
        }
    }
}

/// Isomorphism class of a simple subquotient, local to one [`LatticeOracle`].
pub type SimpleClass = usize;

pub struct LatticeOracle {
    module: ModulePresentation,
    lattice: SubmoduleLattice,
    le: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    classes: Vec<ModulePresentation>,
    class_of: HashMap<(usize, usize), SimpleClass>,
    iso_cap: u64,
}

impl LatticeOracle {
    pub fn new(m: &ModulePresentation, caps: &OracleCaps) -> Result<Self> {
        let lattice = SubmoduleLattice::new(m, caps.vectors)?;
        let n = lattice.len();
        if n > caps.lattice {
            return Err(Error::resource("oracle lattice size", n as u128, caps.lattice as u128));
        }
        let el = lattice.elements();
        let le: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| el[i].is_subspace_of(&el[j])).collect())
            .collect();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let a = m.intersect(&el[i], &el[j])?;
                let b = m.sum(&el[i], &el[j])?;
                let ai = lattice.index_of(&a).expect("lattice is closed under intersection");
                let bi = lattice.index_of(&b).expect("lattice is closed under sum");
                meet[i][j] = ai;
                meet[j][i] = ai;
                join[i][j] = bi;
                join[j][i] = bi;
            }
        }
        Ok(Self {
            module: m.clone(),
            lattice,
            le,
            meet,
            join,
            classes: Vec::new(),
            class_of: HashMap::new(),
            iso_cap: caps.vectors,
        })
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn get(&self, i: usize) -> &Submodule {
        self.lattice.get(i)
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.lattice.index_of(s)
    }

    pub fn zero(&self) -> usize {
        self.lattice.zero()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet_all(&self, parts: &[usize]) -> usize {
        parts.iter().fold(self.top(), |acc, &x| self.meet(acc, x))
    }

    pub fn dim(&self, a: usize) -> usize {
        self.get(a).dim()
    }

    /// Elements `x` with `lower < x <= upper`.
    pub fn strictly_between(&self, lower: usize, upper: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lt(lower, x) && self.le(x, upper))
            .collect()
    }

    /// Minimal elements of `(lower, upper]`: the simple submodules of
    /// `upper / lower`.
    pub fn atoms(&self, lower: usize, upper: usize) -> Vec<usize> {
        let inside = self.strictly_between(lower, upper);
        inside
            .iter()
            .copied()
            .filter(|&a| !inside.iter().any(|&b| self.lt(b, a)))
            .collect()
    }

    /// Class of the simple subquotient `atom / lower`.
    pub fn simple_class(&mut self, atom: usize, lower: usize) -> Result<SimpleClass> {
        if let Some(&c) = self.class_of.get(&(atom, lower)) {
            return Ok(c);
        }
        let s = self.module.subquotient(self.lattice.get(atom), self.lattice.get(lower))?;
        let mut found = None;
        for (c, rep) in self.classes.iter().enumerate() {
            if find_isomorphism(rep, &s, self.iso_cap)?.is_some() {
                found = Some(c);
                break;
            }
        }
        let c = match found {
            Some(c) => c,
            None => {
                self.classes.push(s);
                self.classes.len() - 1
            }
        };
        self.class_of.insert((atom, lower), c);
        Ok(c)
    }

    pub fn class_module(&self, c: SimpleClass) -> &ModulePresentation {
        &self.classes[c]
    }

    /// `As(upper / lower)`: every uniform submodule has exactly one atom
    /// below it, essential in it, and every atom is uniform, so the classes
    /// of the atoms are the associated primes.
    pub fn primes(&mut self, lower: usize, upper: usize) -> Result<BTreeSet<SimpleClass>> {
        let mut out = BTreeSet::new();
        for a in self.atoms(lower, upper) {
            out.insert(self.simple_class(a, lower)?);
        }
        Ok(out)
    }

    /// Any two nonzero submodules of `upper / lower` meet nontrivially.
    pub fn is_uniform(&self, lower: usize, upper: usize) -> bool {
        if lower == upper {
            return false;
        }
        let inside = self.strictly_between(lower, upper);
        inside
            .iter()
            .all(|&a| inside.iter().all(|&b| self.meet(a, b) != lower))
    }

    /// `sub / lower` is essential in `upper / lower`.
    pub fn is_essential(&self, lower: usize, sub: usize, upper: usize) -> bool {
        self.strictly_between(lower, upper)
            .iter()
            .all(|&x| self.meet(x, sub) != lower)
    }

    /// Elements `x_1, ..., x_k` of `[lower, upper]` whose sum over `lower`
    /// is direct.
    pub fn is_independent(&self, lower: usize, xs: &[usize]) -> bool {
        let lo = self.dim(lower);
        let mut acc = lower;
        let mut excess = 0;
        for &x in xs {
            excess += self.dim(x) - lo;
            acc = self.join(acc, x);
        }
        self.dim(acc) - lo == excess
    }

    /// Uniform dimension of `upper / lower`: the size of a largest
    /// independent family of atoms (greedy is exact in a modular lattice).
    pub fn udim(&self, lower: usize, upper: usize) -> usize {
        let mut acc = lower;
        let mut count = 0;
        for a in self.atoms(lower, upper) {
            if self.meet(acc, a) == lower {
                acc = self.join(acc, a);
                count += 1;
            }
        }
        count
    }

    /// `mult(X)` in `upper / lower`: the `X`-isotypic part of the socle
    /// divided by the dimension of `X`.
    pub fn multiplicities(&mut self, lower: usize, upper: usize) -> Result<BTreeMap<SimpleClass, usize>> {
        let mut iso: BTreeMap<SimpleClass, usize> = BTreeMap::new();
        for a in self.atoms(lower, upper) {
            let c = self.simple_class(a, lower)?;
            let e = iso.entry(c).or_insert(lower);
            *e = self.join(*e, a);
        }
        Ok(iso
            .into_iter()
            .map(|(c, top)| (c, (self.dim(top) - self.dim(lower)) / self.classes[c].dim()))
            .collect())
    }

    /// Parts `K_i` (lattice indices) that intersect to `base`, and that no
    /// single one can be dropped from.
    pub fn is_irredundant(&self, base: usize, parts: &[usize]) -> bool {
        (0..parts.len()).all(|i| {
            let rest: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            self.meet_all(&rest) != base
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::{fixtures, Subspace};

    fn idx(o: &LatticeOracle, vs: &[Vec<u8>]) -> usize {
        let m = o.module();
        let s = m.submodule(Subspace::span(m.p(), m.dim(), vs).unwrap()).unwrap();
        o.index_of(&s).unwrap()
    }

    #[test]
    fn mixed_fixture_by_definition() {
        let mut o = LatticeOracle::new(&fixtures::mixed(), &OracleCaps::default()).unwrap();
        let (z, t) = (o.zero(), o.top());
        assert_eq!(o.atoms(z, t).len(), 3);
        assert_eq!(o.udim(z, t), 2);
        assert!(!o.is_uniform(z, t));
        assert_eq!(o.primes(z, t).unwrap().len(), 1);
        let m = o.multiplicities(z, t).unwrap();
        assert_eq!(m.values().copied().collect::<Vec<_>>(), vec![2]);
        let e3 = idx(&o, &[vec![0, 0, 1]]);
        assert!(o.is_uniform(e3, t));
    }

    #[test]
    fn split_fixture_by_definition() {
        let mut o = LatticeOracle::new(&fixtures::split(), &OracleCaps::default()).unwrap();
        let (z, t) = (o.zero(), o.top());
        assert_eq!(o.primes(z, t).unwrap().len(), 2);
        let e1 = idx(&o, &[vec![1, 0]]);
        assert!(!o.is_essential(z, e1, t));
        assert!(o.is_essential(z, t, t));
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let m = ModulePresentation::new(3, 3, vec![], "F3^3").unwrap();
        let err = LatticeOracle::new(&m, &OracleCaps::with_lattice(10)).err().unwrap();
        assert!(err.is_resource());
    }
}
