//! Modules presented by generator action matrices, and their submodules.

use std::fmt;
use std::ops::Deref;

use super::matrix::{self, check_prime, Matrix, Vector};
use super::subspace::{check_vector, Subspace};
use crate::error::{Error, Result};

/// `F_p^dim` together with a list of `dim x dim` matrices acting on column
/// vectors from the left. The acting ring is the unital algebra they
/// generate; with no generators it is just `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModulePresentation {
    p: u32,
    dim: usize,
    generators: Vec<Matrix>,
    label: String,
}

impl ModulePresentation {
    pub fn new(p: u32, dim: usize, generators: Vec<Matrix>, label: impl Into<String>) -> Result<Self> {
        check_prime(p)?;
        for (i, g) in generators.iter().enumerate() {
            if g.p() != p {
                return Err(Error::Shape(format!("generator {i} is over F_{}, expected F_{p}", g.p())));
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Shape(format!(
                    "generator {i} is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(Self {
            p,
            dim,
            generators,
            label: label.into(),
        })
    }

    /// Convenience constructor from row-major integer matrices.
    pub fn from_int_rows(p: u32, dim: usize, generators: &[Vec<Vec<i64>>], label: &str) -> Result<Self> {
        check_prime(p)?;
        let gens = generators
            .iter()
            .map(|rows| {
                if rows.is_empty() && dim > 0 {
                    return Err(Error::Shape("empty generator matrix".into()));
                }
                if rows.is_empty() {
                    return Ok(Matrix::zeros(p, 0, 0));
                }
                Matrix::from_rows(p, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, dim, gens, label)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule(Subspace::zero(self.p, self.dim))
    }

    pub fn full_submodule(&self) -> Submodule {
        Submodule(Subspace::full(self.p, self.dim))
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| self.generators.iter().all(|g| s.contains(&g.apply(v))))
    }

    /// Wraps `s` as a submodule after checking generator invariance.
    pub fn submodule(&self, s: Subspace) -> Result<Submodule> {
        if s.p() != self.p || s.ambient() != self.dim {
            return Err(Error::AmbientMismatch(format!(
                "subspace of F_{}^{} in module over F_{}^{}",
                s.p(),
                s.ambient(),
                self.p,
                self.dim
            )));
        }
        if !self.is_invariant(&s) {
            return Err(Error::NotSubmodule(format!("{s} is not generator-invariant")));
        }
        Ok(Submodule(s))
    }

    pub fn check_submodule(&self, n: &Submodule) -> Result<()> {
        if n.p() != self.p || n.ambient() != self.dim {
            return Err(Error::AmbientMismatch(format!(
                "submodule of F_{}^{} used with module on F_{}^{}",
                n.p(),
                n.ambient(),
                self.p,
                self.dim
            )));
        }
        Ok(())
    }

    /// Smallest submodule containing `seed`.
    pub fn closure(&self, seed: &[Vector]) -> Result<Submodule> {
        for v in seed {
            check_vector(self.p, self.dim, v)?;
        }
        Ok(self.grow(self.zero_submodule(), seed))
    }

    /// Smallest submodule containing the submodule `base` and the vectors
    /// `extra`. Only the new directions are pushed through the generators.
    pub fn grow(&self, base: Submodule, extra: &[Vector]) -> Submodule {
        let mut span = base.0;
        let mut queue: Vec<Vector> = Vec::new();
        for v in extra {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.generators {
                let w = g.apply(&v);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        Submodule(span)
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_submodule(a)?;
        self.check_submodule(b)?;
        Ok(Submodule(a.0.intersect(&b.0)?))
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_submodule(a)?;
        self.check_submodule(b)?;
        Ok(Submodule(a.0.sum(&b.0)?))
    }

    /// The submodule `a` viewed as a module in its own right, in the
    /// coordinates of its echelon basis.
    pub fn restrict(&self, a: &Submodule) -> Result<ModulePresentation> {
        self.check_submodule(a)?;
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let cols: Vec<Vector> = a.basis().iter().map(|v| a.coordinates(&g.apply(v))).collect();
                Matrix::from_columns(self.p, a.dim(), &cols)
            })
            .collect();
        ModulePresentation::new(self.p, a.dim(), gens, format!("{}|sub", self.label))
    }

    /// The subquotient `upper / lower` as a module (`lower ⊆ upper`).
    pub fn subquotient(&self, upper: &Submodule, lower: &Submodule) -> Result<ModulePresentation> {
        if !lower.is_subspace_of(upper) {
            return Err(Error::Precondition(format!("{lower} is not contained in {upper}")));
        }
        let restricted = self.restrict(upper)?;
        let coords: Vec<Vector> = lower.basis().iter().map(|v| upper.coordinates(v)).collect();
        let inner = restricted.submodule(Subspace::span(self.p, upper.dim(), &coords)?)?;
        Ok(quotient(&restricted, &inner)?.module)
    }
}

impl fmt::Debug for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModulePresentation")
            .field("label", &self.label)
            .field("p", &self.p)
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

/// A generator-invariant subspace, canonical by construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule(Subspace);

impl Submodule {
    pub fn subspace(&self) -> &Subspace {
        &self.0
    }

    pub fn into_subspace(self) -> Subspace {
        self.0
    }

    /// Trusts the caller that `s` is invariant; used where invariance
    /// follows algebraically (sums and intersections of submodules).
    pub(crate) fn from_invariant(s: Subspace) -> Self {
        Submodule(s)
    }
}

impl Deref for Submodule {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `M / N` with the induced action in complement coordinates. The quotient
/// coordinates are the non-pivot columns of `N`'s echelon basis.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub base: ModulePresentation,
    pub kernel: Submodule,
    pub module: ModulePresentation,
    /// `k x m`, sends `v` to the coordinates of `v + N`.
    pub projection: Matrix,
    /// `m x k`, a right inverse of `projection`.
    pub section: Matrix,
    free: Vec<usize>,
}

pub fn quotient(m: &ModulePresentation, n: &Submodule) -> Result<QuotientPresentation> {
    m.check_submodule(n)?;
    if !m.is_invariant(n) {
        return Err(Error::NotSubmodule(format!("{n} is not generator-invariant")));
    }
    let p = m.p();
    let free: Vec<usize> = (0..m.dim()).filter(|c| !n.pivots().contains(c)).collect();
    let k = free.len();
    let project = |v: &[u8]| -> Vector {
        let r = n.reduce(v);
        free.iter().map(|&c| r[c]).collect()
    };
    let lift = |q: &[u8]| -> Vector {
        let mut v = vec![0u8; m.dim()];
        for (&c, &x) in free.iter().zip(q) {
            v[c] = x;
        }
        v
    };
    let unit = |i: usize, len: usize| -> Vector {
        let mut v = vec![0u8; len];
        v[i] = 1;
        v
    };
    let projection = Matrix::from_columns(
        p,
        k,
        &(0..m.dim()).map(|c| project(&unit(c, m.dim()))).collect::<Vec<_>>(),
    );
    let section = Matrix::from_columns(p, m.dim(), &(0..k).map(|j| lift(&unit(j, k))).collect::<Vec<_>>());
    let gens = m
        .generators()
        .iter()
        .map(|g| {
            let cols: Vec<Vector> = (0..k).map(|j| project(&g.apply(&lift(&unit(j, k))))).collect();
            Matrix::from_columns(p, k, &cols)
        })
        .collect();
    let module = ModulePresentation::new(p, k, gens, format!("{}/N", m.label()))?;
    Ok(QuotientPresentation {
        base: m.clone(),
        kernel: n.clone(),
        module,
        projection,
        section,
        free,
    })
}

impl QuotientPresentation {
    pub fn project(&self, v: &[u8]) -> Vector {
        let r = self.kernel.reduce(v);
        self.free.iter().map(|&c| r[c]).collect()
    }

    pub fn lift(&self, q: &[u8]) -> Vector {
        self.section.apply(q)
    }

    /// `π(W)` for a submodule `W` of the base.
    pub fn image(&self, w: &Submodule) -> Result<Submodule> {
        let vs: Vec<Vector> = w.basis().iter().map(|v| self.project(v)).collect();
        Ok(Submodule(Subspace::span(self.module.p(), self.module.dim(), &vs)?))
    }

    /// `π^{-1}(W)` for a submodule `W` of the quotient.
    pub fn preimage(&self, w: &Submodule) -> Result<Submodule> {
        self.module.check_submodule(w)?;
        let mut span = self.kernel.subspace().clone();
        for q in w.basis() {
            span.insert(&self.lift(q));
        }
        Ok(Submodule(span))
    }
}

/// `p^dim` as a checked count, for callers that scan the whole space.
pub fn vector_count(m: &ModulePresentation, cap: u64, what: &str) -> Result<u64> {
    matrix::check_space(m.p(), m.dim(), cap, what)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::fixtures;

    fn span(p: u32, m: usize, vs: &[Vector]) -> Subspace {
        Subspace::span(p, m, vs).unwrap()
    }

    #[test]
    fn closure_local_fixture() {
        let b = fixtures::local();
        let c = b.closure(&[vec![0, 1]]).unwrap();
        assert_eq!(c, b.full_submodule());
        assert!(b.closure(&[]).unwrap().is_zero());
    }

    #[test]
    fn closure_without_generators_is_span() {
        let m = ModulePresentation::new(3, 3, vec![], "F3^3").unwrap();
        let c = m.closure(&[vec![1, 2, 0]]).unwrap();
        assert_eq!(c.subspace(), &span(3, 3, &[vec![1, 2, 0]]));
    }

    #[test]
    fn mixed_fixture_intersection() {
        let d = fixtures::mixed();
        let a = d.submodule(span(2, 3, &[vec![0, 0, 1]])).unwrap();
        let b = d.submodule(span(2, 3, &[vec![1, 0, 0], vec![0, 1, 0]])).unwrap();
        assert!(d.intersect(&a, &b).unwrap().is_zero());
        assert_eq!(d.intersect(&a, &a).unwrap(), a);
        assert_eq!(d.sum(&a, &d.zero_submodule()).unwrap(), a);
    }

    #[test]
    fn non_invariant_subspace_rejected() {
        let b = fixtures::local();
        assert!(matches!(b.submodule(span(2, 2, &[vec![0, 1]])), Err(Error::NotSubmodule(_))));
        assert!(quotient(&b, &Submodule(span(2, 2, &[vec![0, 1]]))).is_err());
    }

    #[test]
    fn quotient_by_zero_and_by_everything() {
        let d = fixtures::mixed();
        let q = quotient(&d, &d.zero_submodule()).unwrap();
        assert_eq!(q.module.generators(), d.generators());
        let z = quotient(&d, &d.full_submodule()).unwrap();
        assert_eq!(z.module.dim(), 0);
    }

    #[test]
    fn quotient_section_and_equivariance() {
        let d = fixtures::mixed();
        let n = d.closure(&[vec![0, 0, 1]]).unwrap();
        let q = quotient(&d, &n).unwrap();
        assert_eq!(q.module.dim(), 2);
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(2, 2));
        for v in d.full_submodule().elements() {
            for (g, gbar) in d.generators().iter().zip(q.module.generators()) {
                assert_eq!(q.project(&g.apply(&v)), gbar.apply(&q.project(&v)));
            }
        }
    }

    #[test]
    fn generator_shape_errors() {
        let g = Matrix::zeros(2, 2, 3);
        assert!(matches!(ModulePresentation::new(2, 2, vec![g], "bad"), Err(Error::Shape(_))));
        assert!(ModulePresentation::new(4, 0, vec![], "bad").is_err());
    }

    #[test]
    fn subquotient_of_mixed_fixture() {
        let d = fixtures::mixed();
        let upper = d.closure(&[vec![0, 1, 0]]).unwrap();
        let lower = d.closure(&[vec![1, 0, 0]]).unwrap();
        let sq = d.subquotient(&upper, &lower).unwrap();
        assert_eq!(sq.dim(), 1);
        assert!(sq.generators()[0].is_zero());
    }
}
