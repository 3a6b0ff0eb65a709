//! Dense polynomials over `F_p`, coefficients from the constant term up.

use crate::modcore::matrix::{self, Matrix};

pub type Poly = Vec<u8>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u8]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Remainder of `f` modulo the monic `g`.
pub fn rem(f: &[u8], g: &[u8], p: u32) -> Poly {
    let dg = degree(g).expect("nonzero divisor");
    debug_assert_eq!(g[dg], 1);
    let mut r = trim(f.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr];
        for (i, &gi) in g[..=dg].iter().enumerate() {
            let t = matrix::mul(c, gi, p);
            r[dr - dg + i] = matrix::add(r[dr - dg + i], matrix::neg(t, p), p);
        }
        r = trim(r);
    }
    r
}

/// Quotient of `f` by the monic `g`, assuming exact division.
pub fn div_exact(f: &[u8], g: &[u8], p: u32) -> Poly {
    let dg = degree(g).expect("nonzero divisor");
    let mut r = trim(f.to_vec());
    let Some(df) = degree(&r) else { return Vec::new() };
    let mut q = vec![0u8; df.saturating_sub(dg) + 1];
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr];
        q[dr - dg] = c;
        for (i, &gi) in g[..=dg].iter().enumerate() {
            let t = matrix::mul(c, gi, p);
            r[dr - dg + i] = matrix::add(r[dr - dg + i], matrix::neg(t, p), p);
        }
        r = trim(r);
    }
    debug_assert!(r.is_empty());
    trim(q)
}

/// Monic polynomials of exactly degree `d`, in index order.
fn monic_of_degree(d: usize, p: u32) -> impl Iterator<Item = Poly> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |i| {
        let mut f = matrix::vector_from_index(i, p, d);
        f.push(1);
        f
    })
}

pub fn is_irreducible(f: &[u8], p: u32) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|e| monic_of_degree(e, p).all(|g| !rem(f, &g, p).is_empty()))
}

/// Distinct monic irreducible factors of the monic `f` with their
/// exponents, by trial division in increasing degree.
pub fn factor(f: &[u8], p: u32) -> Vec<(Poly, usize)> {
    let mut rest = trim(f.to_vec());
    let mut out = Vec::new();
    let mut d = 1;
    while degree(&rest).is_some_and(|dr| dr >= 1) {
        if d > degree(&rest).unwrap_or(0) {
            break;
        }
        for g in monic_of_degree(d, p) {
            if !is_irreducible(&g, p) {
                continue;
            }
            let mut e = 0;
            while rem(&rest, &g, p).is_empty() {
                rest = div_exact(&rest, &g, p);
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
        d += 1;
    }
    out
}

/// `f(a)` by Horner's rule.
pub fn eval(f: &[u8], a: &Matrix) -> Matrix {
    let p = a.p();
    let n = a.rows();
    let mut acc = Matrix::zeros(p, n, n);
    for &c in f.iter().rev() {
        acc = acc.mul(a);
        acc.add_scaled(c, &Matrix::identity(p, n));
    }
    acc
}

/// Minimal polynomial of a square matrix: the first linear relation among
/// `I, A, A^2, ...`, made monic.
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let p = a.p();
    let n = a.rows();
    // echelon rows of (flattened power | relation coefficients)
    let mut rows: Vec<(Vec<u8>, Vec<u8>, usize)> = Vec::new();
    let mut power = Matrix::identity(p, n);
    for k in 0..=n {
        let mut left = power.data().to_vec();
        let mut right = vec![0u8; n + 1];
        right[k] = 1;
        for (l, r, piv) in &rows {
            let c = left[*piv];
            if c != 0 {
                let c = matrix::neg(c, p);
                matrix::axpy(&mut left, c, l, p);
                matrix::axpy(&mut right, c, r, p);
            }
        }
        match left.iter().position(|&x| x != 0) {
            None => {
                let lead = matrix::inv(right[k], p);
                matrix::scale(&mut right, lead, p);
                return trim(right);
            }
            Some(piv) => {
                let s = matrix::inv(left[piv], p);
                matrix::scale(&mut left, s, p);
                matrix::scale(&mut right, s, p);
                rows.push((left, right, piv));
            }
        }
        power = power.mul(a);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}
