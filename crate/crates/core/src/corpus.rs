//! A small corpus of concrete examples: algebras with genuinely nonzero
//! brackets in low dimension, parametric operator families on them, and
//! structures derived from Lie and Leibniz algebras. Used by the seeded
//! cross-checks and exposed through the command line.

use crate::algebra::LYAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{frac, int, Scalar};

/// Dimension 2: [e0,e1] = e0 and {e0,e1,e1} = e0.
pub fn two_dim() -> LYAlgebra {
    LYAlgebra::from_entries(
        2,
        &[(0, 1, vec![int(1), int(0)])],
        &[(0, 1, 1, vec![int(1), int(0)])],
    )
    .expect("statically valid entries")
}

/// Dimension 3: [e0,e1] = e2 and {e0,e1,e0} = e2.
pub fn three_dim() -> LYAlgebra {
    LYAlgebra::from_entries(
        3,
        &[(0, 1, vec![int(0), int(0), int(1)])],
        &[(0, 1, 0, vec![int(0), int(0), int(1)])],
    )
    .expect("statically valid entries")
}

/// The cross-product Lie algebra on 3-space, folded into a Lie-Yamaguti
/// structure with {x,y,z} = [[x,y],z].
pub fn so3() -> LYAlgebra {
    LYAlgebra::from_lie(
        3,
        &[
            (0, 1, vec![int(0), int(0), int(1)]),
            (0, 2, vec![int(0), int(-1), int(0)]),
            (1, 2, vec![int(1), int(0), int(0)]),
        ],
    )
    .expect("cross product satisfies the Jacobi identity")
}

/// The structure the non-abelian 2-dimensional Lie algebra [e0,e1] = e0
/// folds into; coincides with [`two_dim`].
pub fn two_dim_from_lie() -> LYAlgebra {
    LYAlgebra::from_lie(2, &[(0, 1, vec![int(1), int(0)])])
        .expect("two-dimensional bracket satisfies the Jacobi identity")
}

/// The fold of the genuinely non-Lie 2-dimensional Leibniz algebra with
/// square e1 * e1 = e0. Both derived brackets vanish (the product image
/// is killed by left multiplication), so the result is the abelian
/// structure — the fold map is honest about collapsing it.
pub fn two_dim_from_leibniz() -> LYAlgebra {
    LYAlgebra::from_leibniz(2, &[(1, 1, vec![int(1), int(0)])])
        .expect("product satisfies the Leibniz identity")
}

/// The nonabelian plane ([e0,e1] = e0) viewed as a Leibniz algebra with
/// product equal to the bracket; the fold doubles the binary bracket and
/// sets {x,y,z} = -[[x,y],z], giving nonzero brackets in both arities.
pub fn plane_fold_from_leibniz() -> LYAlgebra {
    LYAlgebra::from_leibniz(
        2,
        &[
            (0, 1, vec![int(1), int(0)]),
            (1, 0, vec![int(-1), int(0)]),
        ],
    )
    .expect("a Lie bracket satisfies the Leibniz identity")
}

/// Upper-triangular operator family on [`two_dim`]: [[1, k1], [0, k]].
/// Every member satisfies the modified Rota-Baxter identity.
pub fn operator_family_two_dim(k: &Scalar, k1: &Scalar) -> Matrix {
    Matrix::from_rows(vec![
        vec![int(1), k1.clone()],
        vec![crate::scalar::zero(), k.clone()],
    ])
    .expect("rows have equal length")
}

/// Operator family on [`three_dim`]:
///
/// ```text
///   [ a        d  0 ]
///   [ b       -a  0 ]        with  d = (1 - a^2) / b,
///   [ c        f  i ]
/// ```
///
/// so the upper-left block is trace-zero with determinant -1 (an
/// involution of the e0,e1-plane); c, f, i are free. Every member
/// satisfies the modified Rota-Baxter identity. Fails with
/// `ZeroDenominator` when b = 0.
pub fn operator_family_three_dim(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    f: &Scalar,
    i: &Scalar,
) -> Result<Matrix> {
    use num::Zero;
    if b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let d = (crate::scalar::one() - a * a) / b;
    Matrix::from_rows(vec![
        vec![a.clone(), d, crate::scalar::zero()],
        vec![b.clone(), -a, crate::scalar::zero()],
        vec![c.clone(), f.clone(), i.clone()],
    ])
}

/// Named corpus algebras, for listing and export. "ly2"/"ly3" follow the
/// dimension-based names used throughout the docs.
pub fn named_algebras() -> Vec<(&'static str, LYAlgebra)> {
    vec![
        ("ly2", two_dim()),
        ("ly3", three_dim()),
        ("so3", so3()),
        ("ly2-from-lie", two_dim_from_lie()),
        ("leibniz-fold", plane_fold_from_leibniz()),
        ("abelian3", LYAlgebra::abelian(3)),
    ]
}

/// Named corpus operators together with the algebra they act on.
pub fn named_operators() -> Vec<(&'static str, &'static str, Matrix)> {
    vec![
        ("ly2-id", "ly2", Matrix::identity(2)),
        ("ly2-op", "ly2", operator_family_two_dim(&int(2), &int(3))),
        ("ly2-reflection", "ly2", Matrix::from_i64(&[&[1, 0], &[0, -1]])),
        (
            "ly3-op",
            "ly3",
            operator_family_three_dim(&frac(1, 2), &frac(1, 2), &int(1), &int(-1), &int(2))
                .expect("b is nonzero"),
        ),
        ("ly3-id", "ly3", Matrix::identity(3)),
    ]
}

pub fn algebra_by_name(name: &str) -> Result<LYAlgebra> {
    named_algebras()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, a)| a)
        .ok_or_else(|| Error::Parse(format!("unknown example algebra '{name}'")))
}
