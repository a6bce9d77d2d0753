//! Cochain complexes attached to a Lie-Yamaguti algebra with a
//! representation: the plain complex (differential `delta`), the complex of
//! the modified Rota-Baxter operator (differential `partial`, which is
//! `delta` taken over the descendant algebra with the induced
//! representation), and the total complex interleaving both through the
//! comparison maps `phi`. Cochains carry explicit canonical bases so every
//! differential also exists as a matrix, and cohomology dimensions in
//! degrees one and two come from exact rank computations.

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank_checked, solve};
use crate::matrix::Matrix;
use crate::representation::{induced_representation, Representation};
use crate::scalar::{unit, vec_add, vec_add_assign, vec_axpy, vec_is_zero, vec_neg, vec_sub, vec_sub_assign, vec_zero, Scalar};

/// Basis-ordering contract for flattened cochains; bump when the layout of
/// `flatten`/`unflatten` changes.
pub const BASIS_ORDERING_VERSION: &str = "1";

/// Ordered pairs (i,j) with i < j, in the order used for wedge indexing.
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

/// Position of the pair (i,j), i < j, in `wedge_pairs(n)`.
pub fn wedge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn wedge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn c1_len(n: usize, m: usize) -> usize {
    n * m
}

pub fn c2_len(n: usize, m: usize) -> usize {
    let nw = wedge_count(n);
    nw * m + nw * n * m
}

pub fn c3_len(n: usize, m: usize) -> usize {
    let nw = wedge_count(n);
    nw * nw * m + nw * nw * n * m
}

pub fn total2_len(n: usize, m: usize) -> usize {
    c2_len(n, m) + c1_len(n, m)
}

pub fn total3_len(n: usize, m: usize) -> usize {
    c3_len(n, m) + c2_len(n, m)
}

/// A linear map L -> V, stored as an m x n matrix (columns = images of the
/// algebra basis).
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain1 {
    pub n: usize,
    pub m: usize,
    pub map: Matrix,
}

impl Cochain1 {
    pub fn new(map: Matrix) -> Self {
        Cochain1 {
            n: map.cols(),
            m: map.rows(),
            map,
        }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Cochain1 {
            n,
            m,
            map: Matrix::zeros(m, n),
        }
    }

    pub fn eval(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(x)
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    /// Flat layout: index p*n + j holds the u_p coefficient of h(e_j)
    /// (row-major layout of the matrix).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.map.data().to_vec()
    }

    pub fn unflatten(n: usize, m: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != c1_len(n, m) {
            return Err(Error::DimensionMismatch(format!(
                "degree-1 cochain needs {} entries, got {}",
                c1_len(n, m),
                flat.len()
            )));
        }
        let map = Matrix::from_fn(m, n, |p, j| flat[p * n + j].clone());
        Ok(Cochain1 { n, m, map })
    }

    pub fn sub(&self, other: &Cochain1) -> Cochain1 {
        Cochain1 {
            n: self.n,
            m: self.m,
            map: &self.map - &other.map,
        }
    }

    pub fn neg(&self) -> Cochain1 {
        Cochain1 {
            n: self.n,
            m: self.m,
            map: -&self.map,
        }
    }
}

/// A degree-2 cochain: an antisymmetric bilinear f: L^2 -> V (stored on
/// wedge pairs) and a trilinear g: L^3 -> V antisymmetric in its first two
/// slots (stored on wedge pairs x basis).
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain2 {
    pub n: usize,
    pub m: usize,
    pub f: Vec<Vec<Scalar>>,
    pub g: Vec<Vec<Scalar>>,
}

impl Cochain2 {
    pub fn new(n: usize, m: usize, f: Vec<Vec<Scalar>>, g: Vec<Vec<Scalar>>) -> Result<Self> {
        let nw = wedge_count(n);
        if f.len() != nw || g.len() != nw * n {
            return Err(Error::DimensionMismatch(format!(
                "degree-2 cochain needs {nw} wedge values and {} triple values, got {} and {}",
                nw * n,
                f.len(),
                g.len()
            )));
        }
        for v in f.iter().chain(g.iter()) {
            if v.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "cochain values must live in a {m}-dimensional space, got length {}",
                    v.len()
                )));
            }
        }
        Ok(Cochain2 { n, m, f, g })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        let nw = wedge_count(n);
        Cochain2 {
            n,
            m,
            f: vec![vec_zero(m); nw],
            g: vec![vec_zero(m); nw * n],
        }
    }

    pub fn f_at(&self, w: usize) -> &[Scalar] {
        &self.f[w]
    }

    pub fn g_at(&self, w: usize, k: usize) -> &[Scalar] {
        &self.g[w * self.n + k]
    }

    pub fn eval_f(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.m);
        for (w, (i, j)) in wedge_pairs(self.n).into_iter().enumerate() {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            vec_axpy(&mut out, &c, &self.f[w]);
        }
        out
    }

    pub fn eval_g(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec_zero(self.m);
        for (w, (i, j)) in wedge_pairs(self.n).into_iter().enumerate() {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, zk) in z.iter().enumerate() {
                vec_axpy(&mut out, &(&c * zk), &self.g[w * self.n + k]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().chain(self.g.iter()).all(|v| vec_is_zero(v))
    }

    /// Flat layout: f values first (w*m + p), then g values at offset
    /// nw*m with index (w*n + k)*m + p.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(c2_len(self.n, self.m));
        for v in &self.f {
            out.extend(v.iter().cloned());
        }
        for v in &self.g {
            out.extend(v.iter().cloned());
        }
        out
    }

    pub fn unflatten(n: usize, m: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != c2_len(n, m) {
            return Err(Error::DimensionMismatch(format!(
                "degree-2 cochain needs {} entries, got {}",
                c2_len(n, m),
                flat.len()
            )));
        }
        let nw = wedge_count(n);
        let f = (0..nw).map(|w| flat[w * m..(w + 1) * m].to_vec()).collect();
        let base = nw * m;
        let g = (0..nw * n)
            .map(|t| flat[base + t * m..base + (t + 1) * m].to_vec())
            .collect();
        Ok(Cochain2 { n, m, f, g })
    }

    pub fn sub(&self, other: &Cochain2) -> Cochain2 {
        Cochain2 {
            n: self.n,
            m: self.m,
            f: self
                .f
                .iter()
                .zip(&other.f)
                .map(|(a, b)| vec_sub(a, b))
                .collect(),
            g: self
                .g
                .iter()
                .zip(&other.g)
                .map(|(a, b)| vec_sub(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        Cochain2 {
            n: self.n,
            m: self.m,
            f: self
                .f
                .iter()
                .zip(&other.f)
                .map(|(a, b)| vec_add(a, b))
                .collect(),
            g: self
                .g
                .iter()
                .zip(&other.g)
                .map(|(a, b)| vec_add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Cochain2 {
        Cochain2 {
            n: self.n,
            m: self.m,
            f: self.f.iter().map(|v| vec_neg(v)).collect(),
            g: self.g.iter().map(|v| vec_neg(v)).collect(),
        }
    }
}

/// A degree-3 cochain: f on pairs of wedges, g on pairs of wedges times a
/// basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain3 {
    pub n: usize,
    pub m: usize,
    pub f: Vec<Vec<Scalar>>,
    pub g: Vec<Vec<Scalar>>,
}

impl Cochain3 {
    pub fn zero(n: usize, m: usize) -> Self {
        let nw = wedge_count(n);
        Cochain3 {
            n,
            m,
            f: vec![vec_zero(m); nw * nw],
            g: vec![vec_zero(m); nw * nw * n],
        }
    }

    pub fn f_at(&self, w1: usize, w2: usize) -> &[Scalar] {
        let nw = wedge_count(self.n);
        &self.f[w1 * nw + w2]
    }

    pub fn g_at(&self, w1: usize, w2: usize, k: usize) -> &[Scalar] {
        let nw = wedge_count(self.n);
        &self.g[(w1 * nw + w2) * self.n + k]
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().chain(self.g.iter()).all(|v| vec_is_zero(v))
    }

    /// Flat layout: f values first ((w1*nw + w2)*m + p), then g values at
    /// offset nw*nw*m with index ((w1*nw + w2)*n + k)*m + p.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(c3_len(self.n, self.m));
        for v in &self.f {
            out.extend(v.iter().cloned());
        }
        for v in &self.g {
            out.extend(v.iter().cloned());
        }
        out
    }

    pub fn sub(&self, other: &Cochain3) -> Cochain3 {
        Cochain3 {
            n: self.n,
            m: self.m,
            f: self
                .f
                .iter()
                .zip(&other.f)
                .map(|(a, b)| vec_sub(a, b))
                .collect(),
            g: self
                .g
                .iter()
                .zip(&other.g)
                .map(|(a, b)| vec_sub(a, b))
                .collect(),
        }
    }
}

/// Degree-2 element of the total complex: the pair (plain degree-2 part,
/// operator degree-1 part), flattened in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalCochain2 {
    pub ly: Cochain2,
    pub op: Cochain1,
}

impl TotalCochain2 {
    pub fn zero(n: usize, m: usize) -> Self {
        TotalCochain2 {
            ly: Cochain2::zero(n, m),
            op: Cochain1::zero(n, m),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ly.is_zero() && self.op.is_zero()
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.ly.flatten();
        out.extend(self.op.flatten());
        out
    }

    pub fn unflatten(n: usize, m: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != total2_len(n, m) {
            return Err(Error::DimensionMismatch(format!(
                "total degree-2 cochain needs {} entries, got {}",
                total2_len(n, m),
                flat.len()
            )));
        }
        let split = c2_len(n, m);
        Ok(TotalCochain2 {
            ly: Cochain2::unflatten(n, m, &flat[..split])?,
            op: Cochain1::unflatten(n, m, &flat[split..])?,
        })
    }

    pub fn sub(&self, other: &TotalCochain2) -> TotalCochain2 {
        TotalCochain2 {
            ly: self.ly.sub(&other.ly),
            op: self.op.sub(&other.op),
        }
    }
}

/// Degree-3 element of the total complex.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalCochain3 {
    pub ly: Cochain3,
    pub op: Cochain2,
}

impl TotalCochain3 {
    pub fn is_zero(&self) -> bool {
        self.ly.is_zero() && self.op.is_zero()
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.ly.flatten();
        out.extend(self.op.flatten());
        out
    }
}

/// First differential of the plain complex:
///   on pairs:   (d h)(x,y)   = rho(x)h(y) - rho(y)h(x) - h([x,y])
///   on triples: (d h)(x,y,z) = D(x,y)h(z) + theta(y,z)h(x) - theta(x,z)h(y) - h({x,y,z})
pub fn delta1(rep: &Representation, h: &Cochain1) -> Cochain2 {
    let n = rep.dim();
    let m = rep.vdim();
    assert_eq!((h.n, h.m), (n, m), "cochain shape mismatch");
    let alg = rep.algebra();
    let hc: Vec<Vec<Scalar>> = (0..n).map(|j| h.map.col(j)).collect();
    let pairs = wedge_pairs(n);
    let mut f = Vec::with_capacity(pairs.len());
    let mut g = Vec::with_capacity(pairs.len() * n);
    for &(i, j) in &pairs {
        let mut v = rep.rho(i).apply(&hc[j]);
        vec_sub_assign(&mut v, &rep.rho(j).apply(&hc[i]));
        vec_sub_assign(&mut v, &h.map.apply(alg.binary_const(i, j)));
        f.push(v);
    }
    for &(i, j) in &pairs {
        for k in 0..n {
            let mut v = rep.d(i, j).apply(&hc[k]);
            vec_add_assign(&mut v, &rep.theta(j, k).apply(&hc[i]));
            vec_sub_assign(&mut v, &rep.theta(i, k).apply(&hc[j]));
            vec_sub_assign(&mut v, &h.map.apply(alg.ternary_const(i, j, k)));
            g.push(v);
        }
    }
    Cochain2 { n, m, f, g }
}

/// Second differential of the plain complex, on (f,g):
///   on wedge pairs:
///     -rho(x2)g(x1,y1,y2) + rho(y2)g(x1,y1,x2) + g(x1,y1,[x2,y2])
///     + D(x1,y1)f(x2,y2) - f({x1,y1,x2},y2) - f(x2,{x1,y1,y2})
///   on wedge pairs and a third slot z:
///     -theta(y2,z)g(x1,y1,x2) + theta(x2,z)g(x1,y1,y2)
///     + D(x1,y1)g(x2,y2,z) - D(x2,y2)g(x1,y1,z)
///     - g({x1,y1,x2},y2,z) - g(x2,{x1,y1,y2},z)
///     - g(x2,y2,{x1,y1,z}) + g(x1,y1,{x2,y2,z})
pub fn delta2(rep: &Representation, c: &Cochain2) -> Cochain3 {
    let n = rep.dim();
    let m = rep.vdim();
    assert_eq!((c.n, c.m), (n, m), "cochain shape mismatch");
    let alg = rep.algebra();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let pairs = wedge_pairs(n);
    let nw = pairs.len();
    let mut f = Vec::with_capacity(nw * nw);
    let mut g = Vec::with_capacity(nw * nw * n);
    for &(x1, y1) in &pairs {
        let w1 = wedge_index(n, x1, y1);
        for &(x2, y2) in &pairs {
            let mut v = vec_neg(&rep.rho(x2).apply(c.g_at(w1, y2)));
            vec_add_assign(&mut v, &rep.rho(y2).apply(c.g_at(w1, x2)));
            vec_add_assign(
                &mut v,
                &c.eval_g(&units[x1], &units[y1], alg.binary_const(x2, y2)),
            );
            vec_add_assign(&mut v, &rep.d(x1, y1).apply(c.f_at(wedge_index(n, x2, y2))));
            vec_sub_assign(
                &mut v,
                &c.eval_f(alg.ternary_const(x1, y1, x2), &units[y2]),
            );
            vec_sub_assign(
                &mut v,
                &c.eval_f(&units[x2], alg.ternary_const(x1, y1, y2)),
            );
            f.push(v);
        }
    }
    for &(x1, y1) in &pairs {
        let w1 = wedge_index(n, x1, y1);
        for &(x2, y2) in &pairs {
            let w2 = wedge_index(n, x2, y2);
            for z in 0..n {
                let mut v = vec_neg(&rep.theta(y2, z).apply(c.g_at(w1, x2)));
                vec_add_assign(&mut v, &rep.theta(x2, z).apply(c.g_at(w1, y2)));
                vec_add_assign(&mut v, &rep.d(x1, y1).apply(c.g_at(w2, z)));
                vec_sub_assign(&mut v, &rep.d(x2, y2).apply(c.g_at(w1, z)));
                vec_sub_assign(
                    &mut v,
                    &c.eval_g(alg.ternary_const(x1, y1, x2), &units[y2], &units[z]),
                );
                vec_sub_assign(
                    &mut v,
                    &c.eval_g(&units[x2], alg.ternary_const(x1, y1, y2), &units[z]),
                );
                vec_sub_assign(
                    &mut v,
                    &c.eval_g(&units[x2], &units[y2], alg.ternary_const(x1, y1, z)),
                );
                vec_add_assign(
                    &mut v,
                    &c.eval_g(&units[x1], &units[y1], alg.ternary_const(x2, y2, z)),
                );
                g.push(v);
            }
        }
    }
    Cochain3 { n, m, f, g }
}

/// Degree-1 comparison map of the total complex: h |-> h.R - R_V.h.
pub fn phi1(r: &Matrix, rv: &Matrix, h: &Cochain1) -> Cochain1 {
    Cochain1::new(&h.map.matmul(r) - &rv.matmul(&h.map))
}

/// Degree-2 comparison map of the total complex:
///   on pairs:   f(Rx,Ry) - R_V(f(Rx,y) + f(x,Ry)) + f(x,y)
///   on triples: g(Rx,Ry,Rz) - R_V(g(Rx,Ry,z) + g(Rx,y,Rz) + g(x,Ry,Rz) + g(x,y,z))
///               + g(Rx,y,z) + g(x,Ry,z) + g(x,y,Rz)
pub fn phi2(r: &Matrix, rv: &Matrix, c: &Cochain2) -> Cochain2 {
    let n = c.n;
    let m = c.m;
    let rc: Vec<Vec<Scalar>> = (0..n).map(|i| r.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let pairs = wedge_pairs(n);
    let mut f = Vec::with_capacity(pairs.len());
    let mut g = Vec::with_capacity(pairs.len() * n);
    for &(i, j) in &pairs {
        let mut inner = c.eval_f(&rc[i], &units[j]);
        vec_add_assign(&mut inner, &c.eval_f(&units[i], &rc[j]));
        let mut v = c.eval_f(&rc[i], &rc[j]);
        vec_sub_assign(&mut v, &rv.apply(&inner));
        vec_add_assign(&mut v, c.f_at(wedge_index(n, i, j)));
        f.push(v);
    }
    for &(i, j) in &pairs {
        let w = wedge_index(n, i, j);
        for k in 0..n {
            let mut inner = c.eval_g(&rc[i], &rc[j], &units[k]);
            vec_add_assign(&mut inner, &c.eval_g(&rc[i], &units[j], &rc[k]));
            vec_add_assign(&mut inner, &c.eval_g(&units[i], &rc[j], &rc[k]));
            vec_add_assign(&mut inner, c.g_at(w, k));
            let mut v = c.eval_g(&rc[i], &rc[j], &rc[k]);
            vec_sub_assign(&mut v, &rv.apply(&inner));
            vec_add_assign(&mut v, &c.eval_g(&rc[i], &units[j], &units[k]));
            vec_add_assign(&mut v, &c.eval_g(&units[i], &rc[j], &units[k]));
            vec_add_assign(&mut v, &c.eval_g(&units[i], &units[j], &rc[k]));
            g.push(v);
        }
    }
    Cochain2 { n, m, f, g }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// The plain complex of the algebra with coefficients in the
    /// representation.
    Ly,
    /// The complex of the operator: the plain complex of the descendant
    /// algebra with the induced representation.
    Mrbo,
    /// The total complex interleaving the two.
    Total,
}

impl ComplexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ComplexKind::Ly => "ly",
            ComplexKind::Mrbo => "mrbo",
            ComplexKind::Total => "total",
        }
    }
}

impl std::str::FromStr for ComplexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ly" => Ok(ComplexKind::Ly),
            "mrbo" => Ok(ComplexKind::Mrbo),
            // "mrbly" names the same interleaved complex the reports call
            // "total"; both spellings are accepted.
            "total" | "mrbly" => Ok(ComplexKind::Total),
            other => Err(Error::Parse(format!(
                "unknown complex {other:?} (expected ly, mrbo, total, or mrbly)"
            ))),
        }
    }
}

/// Exact dimension data for one complex in degrees one and two. The complex
/// starts in degree one, so H^1 is the full kernel of the first
/// differential.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub complex: String,
    pub basis_ordering_version: String,
    pub algebra_dim: usize,
    pub coefficient_dim: usize,
    pub c1_dim: usize,
    pub c2_dim: usize,
    pub c3_dim: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub h1_dim: usize,
    pub h2_dim: usize,
}

fn report_from_matrices(
    kind: ComplexKind,
    n: usize,
    m: usize,
    c1: usize,
    c2: usize,
    c3: usize,
    d1m: &Matrix,
    d2m: &Matrix,
) -> Result<ComplexReport> {
    if !d2m.matmul(d1m).is_zero() {
        return Err(Error::Internal(
            "second differential composed with the first is nonzero".into(),
        ));
    }
    let rank_d1 = rank_checked(d1m)?;
    let rank_d2 = rank_checked(d2m)?;
    let h1 = c1
        .checked_sub(rank_d1)
        .ok_or_else(|| Error::Internal("rank exceeds domain dimension".into()))?;
    let h2 = c2
        .checked_sub(rank_d1 + rank_d2)
        .ok_or_else(|| Error::Internal("image not contained in kernel".into()))?;
    Ok(ComplexReport {
        complex: kind.as_str().to_string(),
        basis_ordering_version: BASIS_ORDERING_VERSION.to_string(),
        algebra_dim: n,
        coefficient_dim: m,
        c1_dim: c1,
        c2_dim: c2,
        c3_dim: c3,
        rank_d1,
        rank_d2,
        h1_dim: h1,
        h2_dim: h2,
    })
}

fn matrix_from_action(
    dom: usize,
    cod: usize,
    mut act: impl FnMut(&[Scalar]) -> Vec<Scalar>,
) -> Matrix {
    let mut m = Matrix::zeros(cod, dom);
    let mut basis = vec_zero(dom);
    for q in 0..dom {
        basis[q] = crate::scalar::one();
        let col = act(&basis);
        m.set_col(q, &col);
        basis[q] = crate::scalar::zero();
    }
    m
}

/// Matrix of `delta1` in the canonical flat bases.
pub fn delta1_matrix(rep: &Representation) -> Matrix {
    let (n, m) = (rep.dim(), rep.vdim());
    matrix_from_action(c1_len(n, m), c2_len(n, m), |flat| {
        let h = Cochain1::unflatten(n, m, flat).expect("basis vector has the right length");
        delta1(rep, &h).flatten()
    })
}

/// Matrix of `delta2` in the canonical flat bases.
pub fn delta2_matrix(rep: &Representation) -> Matrix {
    let (n, m) = (rep.dim(), rep.vdim());
    matrix_from_action(c2_len(n, m), c3_len(n, m), |flat| {
        let c = Cochain2::unflatten(n, m, flat).expect("basis vector has the right length");
        delta2(rep, &c).flatten()
    })
}

/// Dimension report for the plain complex of `rep`.
pub fn ly_cohomology(rep: &Representation) -> Result<ComplexReport> {
    let (n, m) = (rep.dim(), rep.vdim());
    report_from_matrices(
        ComplexKind::Ly,
        n,
        m,
        c1_len(n, m),
        c2_len(n, m),
        c3_len(n, m),
        &delta1_matrix(rep),
        &delta2_matrix(rep),
    )
}

/// Is `c` a 2-cocycle of the plain complex?
pub fn ly_is_cocycle2(rep: &Representation, c: &Cochain2) -> bool {
    delta2(rep, c).is_zero()
}

/// If `a - b` is a coboundary of the plain complex, returns a witness h
/// with delta1(h) = a - b.
pub fn ly_cohomologous_witness(
    rep: &Representation,
    a: &Cochain2,
    b: &Cochain2,
) -> Option<Cochain1> {
    let (n, m) = (rep.dim(), rep.vdim());
    let target = a.sub(b).flatten();
    let d1m = delta1_matrix(rep);
    solve(&d1m, &target)
        .map(|x| Cochain1::unflatten(n, m, &x).expect("solution has domain length"))
}

/// The total complex of an algebra, representation, and operator pair
/// (R on the algebra, R_V on the coefficients). Construction builds (and
/// thereby validates) the descendant algebra and induced representation.
pub struct TotalComplex {
    rep: Representation,
    r: Matrix,
    rv: Matrix,
    induced: Representation,
}

impl TotalComplex {
    pub fn new(rep: &Representation, r: &Matrix, rv: &Matrix) -> Result<Self> {
        let induced = induced_representation(rep, r, rv)?;
        Ok(TotalComplex {
            rep: rep.clone(),
            r: r.clone(),
            rv: rv.clone(),
            induced,
        })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    /// The induced representation on the descendant algebra; its plain
    /// complex is the operator complex.
    pub fn induced(&self) -> &Representation {
        &self.induced
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rep.dim(), self.rep.vdim())
    }

    /// First differential of the operator complex.
    pub fn partial1(&self, h: &Cochain1) -> Cochain2 {
        delta1(&self.induced, h)
    }

    /// Second differential of the operator complex.
    pub fn partial2(&self, c: &Cochain2) -> Cochain3 {
        delta2(&self.induced, c)
    }

    pub fn phi1(&self, h: &Cochain1) -> Cochain1 {
        phi1(&self.r, &self.rv, h)
    }

    pub fn phi2(&self, c: &Cochain2) -> Cochain2 {
        phi2(&self.r, &self.rv, c)
    }

    /// First total differential: h |-> (delta1 h, -phi1 h).
    pub fn d1(&self, h: &Cochain1) -> TotalCochain2 {
        TotalCochain2 {
            ly: delta1(&self.rep, h),
            op: self.phi1(h).neg(),
        }
    }

    /// Second total differential: (c, h) |-> (delta2 c, -partial1 h - phi2 c).
    pub fn d2(&self, tc: &TotalCochain2) -> TotalCochain3 {
        let op = self.partial1(&tc.op).add(&self.phi2(&tc.ly)).neg();
        TotalCochain3 {
            ly: delta2(&self.rep, &tc.ly),
            op,
        }
    }

    pub fn d1_matrix(&self) -> Matrix {
        let (n, m) = self.dims();
        matrix_from_action(c1_len(n, m), total2_len(n, m), |flat| {
            let h = Cochain1::unflatten(n, m, flat).expect("basis vector has the right length");
            self.d1(&h).flatten()
        })
    }

    pub fn d2_matrix(&self) -> Matrix {
        let (n, m) = self.dims();
        matrix_from_action(total2_len(n, m), total3_len(n, m), |flat| {
            let c = TotalCochain2::unflatten(n, m, flat)
                .expect("basis vector has the right length");
            self.d2(&c).flatten()
        })
    }

    pub fn is_cocycle2(&self, tc: &TotalCochain2) -> bool {
        self.d2(tc).is_zero()
    }

    /// If `a - b` is a total coboundary, returns a witness h with
    /// d1(h) = a - b.
    pub fn cohomologous_witness(&self, a: &TotalCochain2, b: &TotalCochain2) -> Option<Cochain1> {
        let (n, m) = self.dims();
        let target = a.sub(b).flatten();
        solve(&self.d1_matrix(), &target)
            .map(|x| Cochain1::unflatten(n, m, &x).expect("solution has domain length"))
    }

    /// Dimension report for the operator complex (the plain complex of the
    /// induced representation over the descendant).
    pub fn mrbo_report(&self) -> Result<ComplexReport> {
        let (n, m) = self.dims();
        report_from_matrices(
            ComplexKind::Mrbo,
            n,
            m,
            c1_len(n, m),
            c2_len(n, m),
            c3_len(n, m),
            &delta1_matrix(&self.induced),
            &delta2_matrix(&self.induced),
        )
    }

    /// Dimension report for the total complex.
    pub fn report(&self) -> Result<ComplexReport> {
        let (n, m) = self.dims();
        report_from_matrices(
            ComplexKind::Total,
            n,
            m,
            c1_len(n, m),
            c2_len(n, m) + c1_len(n, m),
            c3_len(n, m) + c2_len(n, m),
            &self.d1_matrix(),
            &self.d2_matrix(),
        )
    }
}

/// Dimension report for the operator complex without keeping the total
/// complex around.
pub fn mrbo_cohomology(rep: &Representation, r: &Matrix, rv: &Matrix) -> Result<ComplexReport> {
    TotalComplex::new(rep, r, rv)?.mrbo_report()
}

/// Dimension report for the total complex.
pub fn total_cohomology(rep: &Representation, r: &Matrix, rv: &Matrix) -> Result<ComplexReport> {
    TotalComplex::new(rep, r, rv)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LYAlgebra;
    use crate::scalar::{frac, int};

    fn two_dim() -> LYAlgebra {
        LYAlgebra::from_entries(
            2,
            &[(0, 1, vec![int(1), int(0)])],
            &[(0, 1, 1, vec![int(1), int(0)])],
        )
        .unwrap()
    }

    #[test]
    fn wedge_indexing_round_trip() {
        for n in 0..6 {
            let pairs = wedge_pairs(n);
            assert_eq!(pairs.len(), wedge_count(n));
            for (w, &(i, j)) in pairs.iter().enumerate() {
                assert_eq!(wedge_index(n, i, j), w);
            }
        }
    }

    #[test]
    fn flatten_round_trips() {
        let n = 3;
        let m = 2;
        let mut counter = 0i64;
        let mut next = || {
            counter += 1;
            frac(counter, 3)
        };
        let h = Cochain1::new(Matrix::from_fn(m, n, |_, _| next()));
        assert_eq!(Cochain1::unflatten(n, m, &h.flatten()).unwrap(), h);

        let nw = wedge_count(n);
        let f: Vec<Vec<Scalar>> = (0..nw).map(|_| vec![next(), next()]).collect();
        let g: Vec<Vec<Scalar>> = (0..nw * n).map(|_| vec![next(), next()]).collect();
        let c = Cochain2::new(n, m, f, g).unwrap();
        assert_eq!(Cochain2::unflatten(n, m, &c.flatten()).unwrap(), c);

        let tc = TotalCochain2 { ly: c, op: h };
        assert_eq!(TotalCochain2::unflatten(n, m, &tc.flatten()).unwrap(), tc);

        assert!(Cochain2::unflatten(n, m, &[]).is_err());
    }

    #[test]
    fn eval_respects_antisymmetry() {
        let n = 3;
        let c = {
            let mut f = vec![vec_zero(2); wedge_count(n)];
            f[wedge_index(n, 0, 2)] = vec![int(1), int(-2)];
            let g = vec![vec_zero(2); wedge_count(n) * n];
            Cochain2::new(n, 2, f, g).unwrap()
        };
        let e0 = unit(3, 0);
        let e2 = unit(3, 2);
        assert_eq!(c.eval_f(&e0, &e2), vec![int(1), int(-2)]);
        assert_eq!(c.eval_f(&e2, &e0), vec![int(-1), int(2)]);
        assert_eq!(c.eval_f(&e0, &e0), vec_zero(2));
    }

    /// Hand-derived: for the 2-dim example with its adjoint representation,
    /// delta1 of h = [[a,b],[c,d]] has components (d,-c), (c,0), (2d,-c),
    /// so the kernel is {c = d = 0} and H^1 has dimension 2.
    #[test]
    fn ly_h1_of_two_dim_adjoint() {
        let rep = Representation::adjoint(&two_dim());
        let report = ly_cohomology(&rep).unwrap();
        assert_eq!(report.c1_dim, 4);
        assert_eq!(report.c2_dim, 6);
        assert_eq!(report.rank_d1, 2);
        assert_eq!(report.h1_dim, 2);
        assert_eq!(report.complex, "ly");
        assert_eq!(report.basis_ordering_version, BASIS_ORDERING_VERSION);
    }

    #[test]
    fn delta1_values_match_hand_computation() {
        let rep = Representation::adjoint(&two_dim());
        let h = Cochain1::new(Matrix::from_i64(&[&[1, 2], &[3, 4]]));
        // a=1, b=2, c=3, d=4 in the notation above.
        let out = delta1(&rep, &h);
        assert_eq!(out.f_at(0), &[int(4), int(-3)][..]);
        assert_eq!(out.g_at(0, 0), &[int(3), int(0)][..]);
        assert_eq!(out.g_at(0, 1), &[int(8), int(-3)][..]);
    }

    #[test]
    fn image_of_delta1_is_killed_by_delta2() {
        let rep = Representation::adjoint(&two_dim());
        let h = Cochain1::new(Matrix::from_i64(&[&[1, -2], &[5, 7]]));
        let img = delta1(&rep, &h);
        assert!(delta2(&rep, &img).is_zero());
        assert!(ly_is_cocycle2(&rep, &img));
        // And at the matrix level.
        assert!(delta2_matrix(&rep).matmul(&delta1_matrix(&rep)).is_zero());
    }

    /// On an abelian algebra with the zero representation every
    /// differential vanishes, so cohomology equals the cochain spaces; with
    /// R = R_V = id the comparison maps also cancel, so the same holds for
    /// the operator and total complexes.
    #[test]
    fn abelian_zero_rep_dims() {
        let rep = Representation::zero(LYAlgebra::abelian(2), 1);
        let ly = ly_cohomology(&rep).unwrap();
        assert_eq!((ly.c1_dim, ly.c2_dim, ly.c3_dim), (2, 3, 3));
        assert_eq!((ly.h1_dim, ly.h2_dim), (2, 3));

        let id = Matrix::identity(2);
        let idv = Matrix::identity(1);
        let total = total_cohomology(&rep, &id, &idv).unwrap();
        assert_eq!((total.c1_dim, total.c2_dim, total.c3_dim), (2, 5, 6));
        assert_eq!((total.h1_dim, total.h2_dim), (2, 5));

        let mrbo = mrbo_cohomology(&rep, &id, &idv).unwrap();
        assert_eq!((mrbo.h1_dim, mrbo.h2_dim), (2, 3));
    }

    /// Hand-derived: over the 2-dim example with adjoint coefficients and
    /// R = R_V = [[1,3],[0,2]], the kernel of the total d1 is cut down to
    /// the line b = -3a inside the 2-dimensional kernel of delta1.
    #[test]
    fn total_h1_with_family_operator() {
        let rep = Representation::adjoint(&two_dim());
        let r = Matrix::from_i64(&[&[1, 3], &[0, 2]]);
        let report = total_cohomology(&rep, &r, &r).unwrap();
        assert_eq!(report.h1_dim, 1);
        assert_eq!(report.c2_dim, 10);
        assert_eq!(report.c3_dim, 12);
    }

    /// The commuting square behind d2 . d1 = 0: phi2 . delta1 = partial1 . phi1.
    #[test]
    fn comparison_maps_commute_with_differentials() {
        let rep = Representation::adjoint(&two_dim());
        let r = Matrix::from_i64(&[&[1, 3], &[0, 2]]);
        let tc = TotalComplex::new(&rep, &r, &r).unwrap();
        let h = Cochain1::new(Matrix::from_i64(&[&[2, -1], &[3, 5]]));
        let lhs = tc.phi2(&delta1(&rep, &h));
        let rhs = tc.partial1(&tc.phi1(&h));
        assert_eq!(lhs, rhs);
        // Hence d2 of a total coboundary vanishes.
        assert!(tc.d2(&tc.d1(&h)).is_zero());
        assert!(tc.d2_matrix().matmul(&tc.d1_matrix()).is_zero());
    }

    #[test]
    fn cohomologous_witness_found_for_coboundaries() {
        let rep = Representation::adjoint(&two_dim());
        let h = Cochain1::new(Matrix::from_i64(&[&[1, 4], &[-2, 3]]));
        let img = delta1(&rep, &h);
        let zero = Cochain2::zero(2, 2);
        let w = ly_cohomologous_witness(&rep, &img, &zero).expect("coboundary");
        assert_eq!(delta1(&rep, &w), img);

        // On the abelian example nothing nonzero is a coboundary.
        let zrep = Representation::zero(LYAlgebra::abelian(2), 1);
        let mut f = vec![vec_zero(1)];
        f[0] = vec![int(1)];
        let g = vec![vec_zero(1); 2];
        let c = Cochain2::new(2, 1, f, g).unwrap();
        assert!(ly_is_cocycle2(&zrep, &c));
        assert!(ly_cohomologous_witness(&zrep, &c, &Cochain2::zero(2, 1)).is_none());
    }

    #[test]
    fn total_witness_round_trip() {
        let rep = Representation::adjoint(&two_dim());
        let r = Matrix::from_i64(&[&[1, 3], &[0, 2]]);
        let tcx = TotalComplex::new(&rep, &r, &r).unwrap();
        let h = Cochain1::new(Matrix::from_i64(&[&[1, 0], &[2, -3]]));
        let img = tcx.d1(&h);
        assert!(tcx.is_cocycle2(&img));
        let w = tcx
            .cohomologous_witness(&img, &TotalCochain2::zero(2, 2))
            .expect("total coboundary");
        assert_eq!(tcx.d1(&w), img);
    }
}
