//! Dense matrices and vectors over a prime field `F_p`, `2 <= p <= 251`.
//!
//! Entries are stored as `u8` residues; products are accumulated in `u32`
//! before reduction, so nothing here ever leaves exact arithmetic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 251;

pub type Vector = Vec<u8>;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Input(format!("p must be prime (got {p})")));
    }
    if p > MAX_PRIME {
        return Err(Error::Input(format!("p must be at most {MAX_PRIME} (got {p})")));
    }
    Ok(())
}

pub fn mul(a: u8, b: u8, p: u32) -> u8 {
    ((a as u32 * b as u32) % p) as u8
}

pub fn add(a: u8, b: u8, p: u32) -> u8 {
    ((a as u32 + b as u32) % p) as u8
}

pub fn neg(a: u8, p: u32) -> u8 {
    ((p - a as u32) % p) as u8
}

/// Multiplicative inverse via Fermat; `a` must be nonzero mod `p`.
pub fn inv(a: u8, p: u32) -> u8 {
    debug_assert!(!(a as u32).is_multiple_of(p));
    let mut base = a as u32 % p;
    let mut exp = p - 2;
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u8
}

/// `y += c * x`, in place.
pub fn axpy(y: &mut [u8], c: u8, x: &[u8], p: u32) {
    if c == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = ((*yi as u32 + c as u32 * xi as u32) % p) as u8;
    }
}

pub fn scale(v: &mut [u8], c: u8, p: u32) {
    for x in v.iter_mut() {
        *x = mul(*x, c, p);
    }
}

pub fn is_zero(v: &[u8]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// The canonical vector order: vectors are read as base-`p` integers with
/// coordinate `i` carrying weight `p^i`, so `e1 < e2 < e1 + e2 < e3 < ...`.
pub fn cmp_vectors(a: &[u8], b: &[u8]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// The `index`-th vector of `F_p^m` in canonical order.
pub fn vector_from_index(mut index: u64, p: u32, m: usize) -> Vector {
    let mut v = vec![0u8; m];
    for x in v.iter_mut() {
        *x = (index % p as u64) as u8;
        index /= p as u64;
    }
    v
}

/// `p^m`, or `None` when it does not fit in a `u64`.
pub fn space_size(p: u32, m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(p as u64)?;
    }
    Some(acc)
}

/// Errors with a resource error when `p^m` exceeds `cap`.
pub fn check_space(p: u32, m: usize, cap: u64, what: &str) -> Result<u64> {
    match space_size(p, m) {
        Some(n) if n <= cap => Ok(n),
        Some(n) => Err(Error::resource(
            format!("{what}: scan of F_{p}^{m}"),
            n as u128,
            cap as u128,
        )),
        None => Err(Error::resource(
            format!("{what}: scan of F_{p}^{m}"),
            u128::MAX,
            cap as u128,
        )),
    }
}

/// Iterates the nonzero vectors of `F_p^m` whose last nonzero coordinate is 1,
/// in canonical order. Every 1-dimensional subspace is hit exactly once.
pub fn projective_vectors(p: u32, m: usize) -> impl Iterator<Item = Vector> {
    let total = space_size(p, m).unwrap_or(u64::MAX);
    (1..total)
        .map(move |i| vector_from_index(i, p, m))
        .filter(|v| v.iter().rev().find(|&&x| x != 0) == Some(&1))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major integer rows, rejecting out-of-range
    /// entries and ragged rows.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &x in row {
                if x < 0 || x >= p as i64 {
                    return Err(Error::Input(format!(
                        "entry {x} out of range for p = {p}"
                    )));
                }
                data.push(x as u8);
            }
        }
        Ok(Self {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_columns(p: u32, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn from_row_vectors(p: u32, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend_from_slice(row);
        }
        Self {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn apply(&self, v: &[u8]) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.p;
        (0..self.rows)
            .map(|r| {
                let acc = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| (acc + a as u32 * b as u32) % p);
                acc as u8
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let x = add(out.get(r, c), mul(a, other.get(k, c), self.p), self.p);
                    out.set(r, c, x);
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, c: u8, other: &Matrix) {
        axpy(&mut self.data, c, &other.data, self.p);
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        row_reduce(&mut rows, self.p).len()
    }

    /// A basis of `{x : self * x = 0}` in reduced echelon form.
    pub fn null_space(&self) -> Vec<Vector> {
        let p = self.p;
        let mut rows = self.to_rows();
        let pivots = row_reduce(&mut rows, p);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![0u8; self.cols];
            x[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                x[pc] = neg(row[free], p);
            }
            basis.push(x);
        }
        basis
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}]{:?}", self.p, self.to_rows())
    }
}

/// In-place reduced row echelon form. Zero rows are dropped; the returned
/// vector lists the pivot column of each remaining row.
pub fn row_reduce(rows: &mut Vec<Vector>, p: u32) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let Some(found) = (next..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(next, found);
        let lead = inv(rows[next][c], p);
        scale(&mut rows[next], lead, p);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row[c] != 0 {
                let f = neg(row[c], p);
                axpy(row, f, &pivot_row, p);
            }
        }
        pivots.push(c);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 251] {
            for a in 1..p {
                assert_eq!(mul(a as u8, inv(a as u8, p), p), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn primality() {
        assert!(check_prime(4).is_err());
        assert!(check_prime(1).is_err());
        assert!(check_prime(2).is_ok());
        assert!(check_prime(251).is_ok());
        assert!(check_prime(257).is_err());
    }

    #[test]
    fn canonical_vector_order() {
        let e1 = vec![1, 0, 0];
        let e2 = vec![0, 1, 0];
        let e3 = vec![0, 0, 1];
        let e13 = vec![1, 0, 1];
        assert_eq!(cmp_vectors(&e1, &e2), Ordering::Less);
        assert_eq!(cmp_vectors(&e3, &e13), Ordering::Less);
        assert_eq!(cmp_vectors(&e2, &e3), Ordering::Less);
        assert_eq!(vector_from_index(5, 2, 3), e13);
    }

    #[test]
    fn projective_vectors_count_lines() {
        // (p^m - 1) / (p - 1) lines
        assert_eq!(projective_vectors(2, 3).count(), 7);
        assert_eq!(projective_vectors(3, 2).count(), 4);
        assert_eq!(projective_vectors(5, 0).count(), 0);
    }

    #[test]
    fn null_space_of_nilpotent_block() {
        let a = Matrix::from_rows(2, &[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        let ns = a.null_space();
        assert_eq!(ns, vec![vec![1, 0, 0], vec![0, 0, 1]]);
        for x in &ns {
            assert!(is_zero(&a.apply(x)));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn out_of_range_entry_rejected() {
        assert!(Matrix::from_rows(3, &[vec![0, 3]]).is_err());
        assert!(Matrix::from_rows(3, &[vec![0, 1], vec![1]]).is_err());
    }
}
