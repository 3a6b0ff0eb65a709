//! Intertwiner spaces `Hom_R(M1, M2)`.

use super::matrix::{self, Matrix};
use super::module::ModulePresentation;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Basis of the matrices `X` (`dim M2 x dim M1`) with `X g1 = g2 X` for every
/// generator pair, in canonical (echelon, row-major flattened) form.
pub fn hom_space(m1: &ModulePresentation, m2: &ModulePresentation) -> Result<Vec<Matrix>> {
    if m1.p() != m2.p() {
        return Err(Error::Shape(format!("hom between F_{} and F_{} modules", m1.p(), m2.p())));
    }
    if m1.generators().len() != m2.generators().len() {
        return Err(Error::Shape(format!(
            "generator-count mismatch: {} vs {}",
            m1.generators().len(),
            m2.generators().len()
        )));
    }
    let p = m1.p();
    let (a, b) = (m1.dim(), m2.dim());
    let unknowns = a * b;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // X[r][c] is unknown r * a + c.
    let mut equations: Vec<Vec<u8>> = Vec::new();
    for (g1, g2) in m1.generators().iter().zip(m2.generators()) {
        for r in 0..b {
            for c in 0..a {
                let mut eq = vec![0u8; unknowns];
                for k in 0..a {
                    let x = &mut eq[r * a + k];
                    *x = matrix::add(*x, g1.get(k, c), p);
                }
                for k in 0..b {
                    let x = &mut eq[k * a + c];
                    *x = matrix::add(*x, matrix::neg(g2.get(r, k), p), p);
                }
                if !matrix::is_zero(&eq) {
                    equations.push(eq);
                }
            }
        }
    }
    let solutions = if equations.is_empty() {
        Subspace::full(p, unknowns).basis().to_vec()
    } else {
        Matrix::from_row_vectors(p, unknowns, &equations).null_space()
    };
    let canon = Subspace::span(p, unknowns, &solutions)?;
    Ok(canon
        .basis()
        .iter()
        .map(|flat| {
            let rows: Vec<Vec<i64>> = flat.chunks(a).map(|ch| ch.iter().map(|&x| x as i64).collect()).collect();
            Matrix::from_rows(p, &rows).expect("entries reduced")
        })
        .collect())
}

/// True iff `m` is nonzero and has no proper nonzero submodule.
pub fn is_simple(m: &ModulePresentation) -> bool {
    if m.dim() == 0 {
        return false;
    }
    let full = m.full_submodule();
    let simple = full
        .projective_elements()
        .all(|v| m.closure(&[v]).map(|c| c == full).unwrap_or(false));
    simple
}

/// Schur-style test for simple modules: a nonzero homomorphism between
/// simples is an isomorphism.
pub fn is_isomorphic_simple(s1: &ModulePresentation, s2: &ModulePresentation) -> Result<bool> {
    if !is_simple(s1) || !is_simple(s2) {
        return Err(Error::Precondition("is_isomorphic_simple needs simple modules".into()));
    }
    if s1.dim() != s2.dim() {
        return Ok(false);
    }
    Ok(!hom_space(s1, s2)?.is_empty())
}

/// Searches `Hom(m1, m2)` exhaustively for an invertible element. Used only
/// by the oracle on tiny instances; `cap` bounds `p^dim Hom`.
pub fn find_isomorphism(m1: &ModulePresentation, m2: &ModulePresentation, cap: u64) -> Result<Option<Matrix>> {
    if m1.dim() != m2.dim() || m1.generators().len() != m2.generators().len() {
        return Ok(None);
    }
    if m1.dim() == 0 {
        return Ok(Some(Matrix::zeros(m1.p(), 0, 0)));
    }
    let basis = hom_space(m1, m2)?;
    let total = matrix::check_space(m1.p(), basis.len(), cap, "isomorphism search")?;
    for i in 1..total {
        let coeffs = matrix::vector_from_index(i, m1.p(), basis.len());
        let mut x = Matrix::zeros(m1.p(), m2.dim(), m1.dim());
        for (b, &c) in basis.iter().zip(&coeffs) {
            x.add_scaled(c, b);
        }
        if x.rank() == m1.dim() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::fixtures;

    fn one_dim(p: u32, a: i64) -> ModulePresentation {
        ModulePresentation::from_int_rows(p, 1, &[vec![vec![a]]], "S").unwrap()
    }

    #[test]
    fn scalars_on_one_dimensional_module() {
        let s = one_dim(2, 1);
        let h = hom_space(&s, &s).unwrap();
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn split_fixture_simples_not_isomorphic() {
        // the two simples of F_2 x F_2: diag(1,0) acts by 1 on e1, by 0 on e2
        let s1 = one_dim(2, 1);
        let s2 = one_dim(2, 0);
        assert!(hom_space(&s1, &s2).unwrap().is_empty());
        assert!(!is_isomorphic_simple(&s1, &s2).unwrap());
        assert!(is_isomorphic_simple(&s1, &s1).unwrap());
    }

    #[test]
    fn hom_into_zero_module() {
        let d = fixtures::mixed();
        let zero = ModulePresentation::from_int_rows(2, 0, &[vec![]], "0").unwrap();
        assert!(hom_space(&d, &zero).unwrap().is_empty());
    }

    #[test]
    fn generator_count_mismatch() {
        let a = fixtures::local();
        let b = ModulePresentation::new(2, 2, vec![], "triv").unwrap();
        assert!(matches!(hom_space(&a, &b), Err(Error::Shape(_))));
    }

    #[test]
    fn intertwiners_commute() {
        let d = fixtures::mixed();
        let h = hom_space(&d, &d).unwrap();
        assert!(!h.is_empty());
        for x in &h {
            for g in d.generators() {
                assert_eq!(x.mul(g), g.mul(x));
            }
        }
    }

    #[test]
    fn simples_of_different_dimension() {
        let s = one_dim(2, 1);
        let t = fixtures::companion(2, &[1, 1, 1]); // x^2 + x + 1 irreducible over F_2
        assert!(is_simple(&t));
        let s_one_gen = s.clone();
        assert!(!is_isomorphic_simple(&s_one_gen, &t).unwrap());
    }

    #[test]
    fn non_simple_rejected() {
        let b = fixtures::local();
        assert!(matches!(is_isomorphic_simple(&b, &b), Err(Error::Precondition(_))));
    }

    #[test]
    fn isomorphism_search_finds_relabelling() {
        let a = ModulePresentation::from_int_rows(2, 2, &[vec![vec![0, 1], vec![0, 0]]], "a").unwrap();
        let b = ModulePresentation::from_int_rows(2, 2, &[vec![vec![0, 0], vec![1, 0]]], "b").unwrap();
        let x = find_isomorphism(&a, &b, 1 << 10).unwrap().expect("isomorphic");
        assert_eq!(x.mul(&a.generators()[0]), b.generators()[0].mul(&x));
        assert!(find_isomorphism(&a, &fixtures::split(), 1 << 10).unwrap().is_none());
    }
}
