//! Exact rank, kernel, and solving over the rationals.
//!
//! Rank is computed by two independent strategies and cross-checked:
//! fraction-free Bareiss elimination on a denominator-cleared integer copy,
//! and plain Gauss-Jordan reduction in rational arithmetic. They share no
//! code beyond the `Matrix` accessors, so agreement is a meaningful oracle
//! for both.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{one, zero, Scalar};

/// Rank via fraction-free Bareiss elimination.
///
/// Each row is scaled by the lcm of its denominators first (row scaling by a
/// nonzero rational preserves rank), then the classic two-step update
/// `m[i][j] := (pivot * m[i][j] - m[i][p] * m[r][j]) / prev_pivot` runs in
/// BigInt arithmetic. The division is exact by Sylvester's determinant
/// identity; we verify that instead of assuming it.
pub fn rank_bareiss(mat: &Matrix) -> usize {
    let rows = mat.rows();
    let cols = mat.cols();
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let lcm = (0..cols).fold(BigInt::one(), |acc, j| acc.lcm(mat.at(i, j).denom()));
            (0..cols)
                .map(|j| {
                    let e = mat.at(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form in rational arithmetic.
/// Returns the reduced matrix and the pivot column indices.
pub fn rref(mat: &Matrix) -> (Matrix, Vec<usize>) {
    let rows = mat.rows();
    let cols = mat.cols();
    let mut m = mat.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m.at(p, j).clone();
                m[(p, j)] = m.at(r, j).clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = {
            let piv = m.at(r, c).clone();
            one() / piv
        };
        for j in c..cols {
            let v = m.at(r, j) * &inv;
            m[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || m.at(i, c).is_zero() {
                continue;
            }
            let factor = m.at(i, c).clone();
            for j in c..cols {
                let v = m.at(i, j) - &(&factor * m.at(r, j));
                m[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank_rref(mat: &Matrix) -> usize {
    rref(mat).1.len()
}

/// Rank with the two strategies cross-checked; disagreement is a bug in one
/// of them, never a property of the input.
pub fn rank_checked(mat: &Matrix) -> Result<usize> {
    let a = rank_bareiss(mat);
    let b = rank_rref(mat);
    if a != b {
        return Err(Error::Internal(format!(
            "rank disagreement: Bareiss {a}, row-echelon {b} on a {}x{} matrix",
            mat.rows(),
            mat.cols()
        )));
    }
    Ok(a)
}

/// Basis of the null space, one vector per free column, in column order.
pub fn kernel_basis(mat: &Matrix) -> Vec<Vec<Scalar>> {
    let cols = mat.cols();
    let (r, pivots) = rref(mat);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![zero(); cols];
        v[free] = one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.at(row, free);
        }
        basis.push(v);
    }
    basis
}

/// One particular solution of `a x = b` (free variables set to zero),
/// or None if the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len(), "solve: dimension mismatch");
    let cols = a.cols();
    let rhs = Matrix::from_fn(b.len(), 1, |i, _| b[i].clone());
    let (r, pivots) = rref(&a.hstack(&rhs));
    // A pivot in the appended column means b is outside the column space.
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.at(row, cols).clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or None if singular.
pub fn invert(a: &Matrix) -> Result<Option<Matrix>> {
    a.require_square()?;
    let n = a.rows();
    let (r, pivots) = rref(&a.hstack(&Matrix::identity(n)));
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    Ok(Some(Matrix::from_fn(n, n, |i, j| r.at(i, n + j).clone())))
}

/// Whether `b` lies in the column space of `a`.
pub fn image_contains(a: &Matrix, b: &[Scalar]) -> bool {
    solve(a, b).is_some()
}
