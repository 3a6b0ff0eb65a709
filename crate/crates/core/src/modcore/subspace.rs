//! Subspaces of `F_p^m` held in reduced row echelon form.
//!
//! The echelon basis is unique for a given span, so structural equality of
//! two `Subspace` values is equality of spans.

use std::cmp::Ordering;
use std::fmt;

use super::matrix::{self, axpy, cmp_vectors, inv, is_zero, neg, row_reduce, scale, Vector};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Self {
            p,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self {
            p,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical basis of the span of `vectors`. Every vector must have
    /// length `ambient` with entries reduced mod `p`.
    pub fn span(p: u32, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_vector(p, ambient, v)?;
        }
        let mut rows = vectors.to_vec();
        let pivots = row_reduce(&mut rows, p);
        Ok(Self {
            p,
            ambient,
            rows,
            pivots,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon basis; the result vanishes on every
    /// pivot column and is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u8]) -> Vector {
        let mut out = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if out[c] != 0 {
                let f = neg(out[c], self.p);
                axpy(&mut out, f, row, self.p);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns `false` if it was already inside.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let lead = inv(r[c], self.p);
        scale(&mut r, lead, self.p);
        for row in self.rows.iter_mut() {
            if row[c] != 0 {
                let f = neg(row[c], self.p);
                axpy(row, f, &r, self.p);
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < c);
        self.rows.insert(at, r);
        self.pivots.insert(at, c);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|v| other.contains(v))
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.p != other.p || self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(format!(
                "F_{}^{} vs F_{}^{}",
                self.p, self.ambient, other.p, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut out = self.clone();
        for v in &other.rows {
            out.insert(v);
        }
        Ok(out)
    }

    /// Intersection by the Zassenhaus construction: reduce `[a | a]` and
    /// `[b | 0]` together; rows whose left half vanishes span `A ∩ B` on the
    /// right.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let m = self.ambient;
        let mut rows: Vec<Vector> = self
            .rows
            .iter()
            .map(|a| a.iter().chain(a.iter()).copied().collect())
            .chain(
                other
                    .rows
                    .iter()
                    .map(|b| b.iter().copied().chain(std::iter::repeat_n(0, m)).collect()),
            )
            .collect();
        row_reduce(&mut rows, self.p);
        let meet: Vec<Vector> = rows
            .into_iter()
            .filter(|r| is_zero(&r[..m]))
            .map(|r| r[m..].to_vec())
            .collect();
        Subspace::span(self.p, m, &meet)
    }

    /// Iterates every vector of the subspace (all `p^dim` of them).
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        let total = matrix::space_size(self.p, self.dim()).unwrap_or(u64::MAX);
        (0..total).map(move |i| self.combination(&matrix::vector_from_index(i, self.p, self.dim())))
    }

    /// Nonzero vectors up to scalars: one per line through the origin.
    pub fn projective_elements(&self) -> impl Iterator<Item = Vector> + '_ {
        matrix::projective_vectors(self.p, self.dim()).map(move |c| self.combination(&c))
    }

    fn combination(&self, coeffs: &[u8]) -> Vector {
        let mut v = vec![0u8; self.ambient];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            axpy(&mut v, c, row, self.p);
        }
        v
    }

    /// Coordinates of `v` (assumed to lie in the span) in the echelon basis.
    pub fn coordinates(&self, v: &[u8]) -> Vector {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&c| v[c]).collect()
    }
}

pub(crate) fn check_vector(p: u32, ambient: usize, v: &[u8]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::Shape(format!(
            "vector of length {} in F_{p}^{ambient}",
            v.len()
        )));
    }
    if let Some(&x) = v.iter().find(|&&x| x as u32 >= p) {
        return Err(Error::Shape(format!("entry {x} not reduced mod {p}")));
    }
    Ok(())
}

impl Ord for Subspace {
    /// `(dimension, lexicographic canonical basis)`, rows compared in the
    /// canonical vector order.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.ambient, self.dim())
            .cmp(&(other.p, other.ambient, other.dim()))
            .then_with(|| {
                self.rows
                    .iter()
                    .zip(&other.rows)
                    .map(|(a, b)| cmp_vectors(a, b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ">")
    }
}

/// Canonical reduced echelon basis of the span of `vectors`.
pub fn rref_canonicalize(p: u32, ambient: usize, vectors: &[Vector]) -> Result<Vec<Vector>> {
    Ok(Subspace::span(p, ambient, vectors)?.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        assert_eq!(
            rref_canonicalize(2, 2, &[vec![0, 1], vec![1, 1]]).unwrap(),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert!(rref_canonicalize(2, 2, &[]).unwrap().is_empty());
        assert_eq!(rref_canonicalize(5, 2, &[vec![2, 4]]).unwrap(), vec![vec![1, 2]]);
    }

    #[test]
    fn rref_rejects_mixed_shapes() {
        assert!(matches!(
            rref_canonicalize(2, 2, &[vec![1, 0], vec![1, 0, 1]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(rref_canonicalize(3, 2, &[vec![1, 3]]), Err(Error::Shape(_))));
    }

    #[test]
    fn insert_matches_span() {
        let vs = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 2], vec![2, 2, 2, 2]];
        let mut s = Subspace::zero(3, 4);
        for v in &vs {
            s.insert(v);
        }
        assert_eq!(s, Subspace::span(3, 4, &vs).unwrap());
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let a = Subspace::span(2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = Subspace::span(2, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(2, 3, &[vec![0, 1, 0]]).unwrap());
        let c = Subspace::span(2, 3, &[vec![0, 0, 1]]).unwrap();
        assert!(a.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::zero(2, 3);
        let b = Subspace::zero(3, 3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn elements_enumerates_span() {
        let a = Subspace::span(3, 3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let all: Vec<_> = a.elements().collect();
        assert_eq!(all.len(), 9);
        assert!(all.iter().all(|v| a.contains(v)));
        assert_eq!(a.projective_elements().count(), 4);
    }
}
