//! Small named modules used throughout tests, the corpus and the CLI.

use super::matrix::{neg, Matrix};
use super::module::ModulePresentation;

/// `F_2[x]/(x^2)` as its own regular module: `A e2 = e1`, `A e1 = 0`.
pub fn local() -> ModulePresentation {
    ModulePresentation::from_int_rows(2, 2, &[vec![vec![0, 1], vec![0, 0]]], "B").expect("fixture")
}

/// `F_2 x F_2` through the idempotent `diag(1, 0)`.
pub fn split() -> ModulePresentation {
    ModulePresentation::from_int_rows(2, 2, &[vec![vec![1, 0], vec![0, 0]]], "C").expect("fixture")
}

/// `F_2[x]/(x^2) ⊕ F_2[x]/(x)`: `A e2 = e1`, `A e1 = A e3 = 0`.
pub fn mixed() -> ModulePresentation {
    ModulePresentation::from_int_rows(
        2,
        3,
        &[vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]],
        "D",
    )
    .expect("fixture")
}

/// The regular module of `F_p[x]/(f)` on the basis `1, x, ..., x^{d-1}`,
/// with `x` acting by its companion matrix. `coeffs` lists `f` from the
/// constant term up and must be monic of degree `d >= 1`.
pub fn companion(p: u32, coeffs: &[u8]) -> ModulePresentation {
    let d = coeffs.len() - 1;
    assert!(d >= 1 && coeffs[d] == 1, "companion needs a monic polynomial");
    let mut a = Matrix::zeros(p, d, d);
    for j in 0..d - 1 {
        a.set(j + 1, j, 1);
    }
    for (i, &c) in coeffs[..d].iter().enumerate() {
        a.set(i, d - 1, neg(c % p as u8, p));
    }
    ModulePresentation::new(p, d, vec![a], format!("F{p}[x]/({})", poly_name(coeffs))).expect("fixture")
}

pub fn poly_name(coeffs: &[u8]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Upper triangular `2 x 2` matrices acting on `F_p^2`, generated by `E11`
/// and `E12`.
pub fn upper_triangular_natural(p: u32) -> ModulePresentation {
    ModulePresentation::from_int_rows(
        p,
        2,
        &[vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1], vec![0, 0]]],
        &format!("T2(F{p})-natural"),
    )
    .expect("fixture")
}

/// The left regular module of the upper triangular `2 x 2` matrices, on the
/// basis `E11, E12, E22`, through left multiplication by `E11` and `E12`.
pub fn upper_triangular_regular(p: u32) -> ModulePresentation {
    ModulePresentation::from_int_rows(
        p,
        3,
        &[
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]],
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]],
        ],
        &format!("T2(F{p})-regular"),
    )
    .expect("fixture")
}

/// A uniform module with simple socle `<e1>` and two further composition
/// factors on top: `E` projects onto `e1`, `F` sends `e2` and `e3` to `e1`.
pub fn glued_tops() -> ModulePresentation {
    ModulePresentation::from_int_rows(
        2,
        3,
        &[
            vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]],
            vec![vec![0, 1, 1], vec![0, 0, 0], vec![0, 0, 0]],
        ],
        "E",
    )
    .expect("fixture")
}

/// `F_p^dim` with no generators: every subspace is a submodule.
pub fn trivial(p: u32, dim: usize) -> ModulePresentation {
    ModulePresentation::new(p, dim, Vec::new(), format!("F{p}^{dim}")).expect("fixture")
}

/// The direct sum with block-diagonal generators. A module with fewer
/// generators is padded with zero actions.
pub fn direct_sum(a: &ModulePresentation, b: &ModulePresentation) -> ModulePresentation {
    assert_eq!(a.p(), b.p(), "direct sum over different fields");
    let p = a.p();
    let (da, db) = (a.dim(), b.dim());
    let count = a.generators().len().max(b.generators().len());
    let gens = (0..count)
        .map(|k| {
            let mut g = Matrix::zeros(p, da + db, da + db);
            if let Some(x) = a.generators().get(k) {
                for r in 0..da {
                    for c in 0..da {
                        g.set(r, c, x.get(r, c));
                    }
                }
            }
            if let Some(y) = b.generators().get(k) {
                for r in 0..db {
                    for c in 0..db {
                        g.set(da + r, da + c, y.get(r, c));
                    }
                }
            }
            g
        })
        .collect();
    ModulePresentation::new(p, da + db, gens, format!("{}+{}", a.label(), b.label())).expect("fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_of_x_squared_is_isomorphic_to_local_fixture() {
        let c = companion(2, &[0, 0, 1]);
        // x * 1 = x, so the companion sends e1 to e2; fixture B is the mirror image
        assert_eq!(c.generators()[0].column(0), vec![0, 1]);
        assert!(crate::modcore::find_isomorphism(&c, &local(), 64).unwrap().is_some());
    }

    #[test]
    fn companion_last_column() {
        // x^2 + 1 over F_3: x * x = -1
        let m = companion(3, &[1, 0, 1]);
        assert_eq!(m.generators()[0].column(1), vec![2, 0]);
        assert_eq!(m.label(), "F3[x]/(x^2+1)");
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let s = direct_sum(&local(), &split());
        assert_eq!(s.dim(), 4);
        assert_eq!(s.label(), "B+C");
        let g = &s.generators()[0];
        assert_eq!(g.get(0, 1), 1);
        assert_eq!(g.get(2, 2), 1);
        assert_eq!(g.get(3, 3), 0);
        let n = crate::modcore::enumerate_submodules(&direct_sum(&local(), &local()), 1 << 10).unwrap();
        assert_eq!(n.len(), 15);
        assert_eq!(crate::modcore::enumerate_submodules(&trivial(2, 3), 1 << 10).unwrap().len(), 16);
    }
}
