//! Operator identities on a Lie-Yamaguti algebra: modified Rota-Baxter
//! operators, Rota-Baxter operators of weight -1, Nijenhuis operators, the
//! descendant structure an MRB operator induces, and brute-force operator
//! search over a candidate entry pool.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::ToPrimitive;

use crate::algebra::LYAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{AxiomReport, ReportBuilder};
use crate::scalar::{unit, vec_add, vec_sub, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// [Rx,Ry] = R([Rx,y] + [x,Ry]) - [x,y], plus the ternary analogue.
    ModifiedRotaBaxter,
    /// [Tx,Ty] = T([Tx,y] + [x,Ty] - [x,y]), plus the ternary analogue.
    RotaBaxterWeightM1,
    /// [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y]), plus the ternary analogue.
    Nijenhuis,
}

impl OperatorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::ModifiedRotaBaxter => "mrb",
            OperatorKind::RotaBaxterWeightM1 => "rb_m1",
            OperatorKind::Nijenhuis => "nijenhuis",
        }
    }
}

impl FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mrb" => Ok(OperatorKind::ModifiedRotaBaxter),
            "rb_m1" => Ok(OperatorKind::RotaBaxterWeightM1),
            "nijenhuis" => Ok(OperatorKind::Nijenhuis),
            other => Err(Error::Parse(format!(
                "unknown operator kind {other:?} (expected mrb, rb_m1, or nijenhuis)"
            ))),
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn require_operator_shape(alg: &LYAlgebra, m: &Matrix) -> Result<()> {
    m.require_square()?;
    if m.rows() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, algebra dimension is {}",
            m.rows(),
            m.cols(),
            alg.dim()
        )));
    }
    Ok(())
}

/// Checks the modified Rota-Baxter identities on all basis pairs/triples:
///   [Rx,Ry] = R([Rx,y] + [x,Ry]) - [x,y]
///   {Rx,Ry,Rz} = R({x,Ry,Rz} + {Rx,y,Rz} + {Rx,Ry,z} + {x,y,z})
///                - {Rx,y,z} - {x,Ry,z} - {x,y,Rz}
pub fn check_modified_rb(alg: &LYAlgebra, r: &Matrix) -> Result<AxiomReport> {
    require_operator_shape(alg, r)?;
    let n = alg.dim();
    let rc: Vec<Vec<Scalar>> = (0..n).map(|i| r.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let mut b = ReportBuilder::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = alg.b2(&rc[i], &rc[j]);
            let inner = vec_add(&alg.b2(&rc[i], &units[j]), &alg.b2(&units[i], &rc[j]));
            let rhs = vec_sub(&r.apply(&inner), alg.binary_const(i, j));
            b.check("mrb-binary", &[i, j], &lhs, &rhs);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg.b3(&rc[i], &rc[j], &rc[k]);
                let mut inner = alg.b3(&units[i], &rc[j], &rc[k]);
                crate::scalar::vec_add_assign(&mut inner, &alg.b3(&rc[i], &units[j], &rc[k]));
                crate::scalar::vec_add_assign(&mut inner, &alg.b3(&rc[i], &rc[j], &units[k]));
                crate::scalar::vec_add_assign(&mut inner, alg.ternary_const(i, j, k));
                let mut rhs = r.apply(&inner);
                crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&rc[i], &units[j], &units[k]));
                crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&units[i], &rc[j], &units[k]));
                crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&units[i], &units[j], &rc[k]));
                b.check("mrb-ternary", &[i, j, k], &lhs, &rhs);
            }
        }
    }
    Ok(b.finish())
}

/// Checks the weight -1 Rota-Baxter identities on all basis pairs/triples:
///   [Tx,Ty] = T([Tx,y] + [x,Ty] - [x,y])
///   {Tx,Ty,Tz} = T({x,Ty,Tz} + {Tx,y,Tz} + {Tx,Ty,z}
///                 - {x,y,Tz} - {Tx,y,z} - {x,Ty,z} + {x,y,z})
pub fn check_rb_weight_m1(alg: &LYAlgebra, t: &Matrix) -> Result<AxiomReport> {
    require_operator_shape(alg, t)?;
    let n = alg.dim();
    let tc: Vec<Vec<Scalar>> = (0..n).map(|i| t.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let mut b = ReportBuilder::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = alg.b2(&tc[i], &tc[j]);
            let mut inner = vec_add(&alg.b2(&tc[i], &units[j]), &alg.b2(&units[i], &tc[j]));
            crate::scalar::vec_sub_assign(&mut inner, alg.binary_const(i, j));
            b.check("rbm1-binary", &[i, j], &lhs, &t.apply(&inner));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg.b3(&tc[i], &tc[j], &tc[k]);
                let mut inner = alg.b3(&units[i], &tc[j], &tc[k]);
                crate::scalar::vec_add_assign(&mut inner, &alg.b3(&tc[i], &units[j], &tc[k]));
                crate::scalar::vec_add_assign(&mut inner, &alg.b3(&tc[i], &tc[j], &units[k]));
                crate::scalar::vec_sub_assign(&mut inner, &alg.b3(&units[i], &units[j], &tc[k]));
                crate::scalar::vec_sub_assign(&mut inner, &alg.b3(&tc[i], &units[j], &units[k]));
                crate::scalar::vec_sub_assign(&mut inner, &alg.b3(&units[i], &tc[j], &units[k]));
                crate::scalar::vec_add_assign(&mut inner, alg.ternary_const(i, j, k));
                b.check("rbm1-ternary", &[i, j, k], &lhs, &t.apply(&inner));
            }
        }
    }
    Ok(b.finish())
}

/// Checks the Nijenhuis identities on all basis pairs/triples:
///   [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y])
///   {Nx,Ny,Nz} = N({Nx,Ny,z} + {Nx,y,Nz} + {x,Ny,Nz})
///                - N²({Nx,y,z} + {x,Ny,z} + {x,y,Nz}) + N³{x,y,z}
pub fn check_nijenhuis(alg: &LYAlgebra, nop: &Matrix) -> Result<AxiomReport> {
    require_operator_shape(alg, nop)?;
    let n = alg.dim();
    let n2 = nop.matmul(nop);
    let n3 = n2.matmul(nop);
    let nc: Vec<Vec<Scalar>> = (0..n).map(|i| nop.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let mut b = ReportBuilder::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = alg.b2(&nc[i], &nc[j]);
            let mut inner = vec_add(&alg.b2(&nc[i], &units[j]), &alg.b2(&units[i], &nc[j]));
            crate::scalar::vec_sub_assign(&mut inner, &nop.apply(alg.binary_const(i, j)));
            b.check("nij-binary", &[i, j], &lhs, &nop.apply(&inner));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alg.b3(&nc[i], &nc[j], &nc[k]);
                let mut one_n = alg.b3(&nc[i], &nc[j], &units[k]);
                crate::scalar::vec_add_assign(&mut one_n, &alg.b3(&nc[i], &units[j], &nc[k]));
                crate::scalar::vec_add_assign(&mut one_n, &alg.b3(&units[i], &nc[j], &nc[k]));
                let mut two_n = alg.b3(&nc[i], &units[j], &units[k]);
                crate::scalar::vec_add_assign(&mut two_n, &alg.b3(&units[i], &nc[j], &units[k]));
                crate::scalar::vec_add_assign(&mut two_n, &alg.b3(&units[i], &units[j], &nc[k]));
                let mut rhs = nop.apply(&one_n);
                crate::scalar::vec_sub_assign(&mut rhs, &n2.apply(&two_n));
                crate::scalar::vec_add_assign(&mut rhs, &n3.apply(alg.ternary_const(i, j, k)));
                b.check("nij-ternary", &[i, j, k], &lhs, &rhs);
            }
        }
    }
    Ok(b.finish())
}

pub fn check_operator(alg: &LYAlgebra, m: &Matrix, kind: OperatorKind) -> Result<AxiomReport> {
    match kind {
        OperatorKind::ModifiedRotaBaxter => check_modified_rb(alg, m),
        OperatorKind::RotaBaxterWeightM1 => check_rb_weight_m1(alg, m),
        OperatorKind::Nijenhuis => check_nijenhuis(alg, m),
    }
}

/// 2T - id: sends a weight -1 Rota-Baxter operator to a modified one.
pub fn modified_from_rb(t: &Matrix) -> Result<Matrix> {
    t.require_square()?;
    Ok(&t.scaled(&crate::scalar::int(2)) - &Matrix::identity(t.rows()))
}

/// The descendant structure of a modified Rota-Baxter operator:
///   [x,y]_R   = [Rx,y] + [x,Ry]
///   {x,y,z}_R = {x,Ry,Rz} + {Rx,y,Rz} + {Rx,Ry,z} + {x,y,z}
/// The operator must pass `check_modified_rb` first; the descendant is then
/// itself a Lie-Yamaguti algebra on which R is again modified Rota-Baxter.
pub fn descendant(alg: &LYAlgebra, r: &Matrix) -> Result<LYAlgebra> {
    let report = check_modified_rb(alg, r)?;
    if !report.passed {
        return Err(Error::PreconditionFailed {
            check: "modified Rota-Baxter identity",
            report,
        });
    }
    let n = alg.dim();
    let rc: Vec<Vec<Scalar>> = (0..n).map(|i| r.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let mut binary = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            binary.push(vec_add(
                &alg.b2(&rc[i], &units[j]),
                &alg.b2(&units[i], &rc[j]),
            ));
        }
    }
    let mut ternary = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = alg.b3(&units[i], &rc[j], &rc[k]);
                crate::scalar::vec_add_assign(&mut v, &alg.b3(&rc[i], &units[j], &rc[k]));
                crate::scalar::vec_add_assign(&mut v, &alg.b3(&rc[i], &rc[j], &units[k]));
                crate::scalar::vec_add_assign(&mut v, alg.ternary_const(i, j, k));
                ternary.push(v);
            }
        }
    }
    LYAlgebra::from_tensors(n, binary, ternary)
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 1 << 20;

/// Enumerates all dim x dim matrices with entries drawn from `candidates`
/// (row-major positions, first entry most significant, candidate order as
/// given) and returns those passing the requested operator check, in
/// enumeration order. Refuses up front if the enumeration would exceed
/// `budget` matrices.
pub fn search_operators(
    alg: &LYAlgebra,
    candidates: &[Scalar],
    kind: OperatorKind,
    budget: u64,
) -> Result<Vec<Matrix>> {
    search_operators_with_threads(alg, candidates, kind, budget, 1)
}

/// Same as `search_operators`, with the candidate space split across
/// `threads` workers. The result is identical for every thread count:
/// hits are merged back in enumeration order.
pub fn search_operators_with_threads(
    alg: &LYAlgebra,
    candidates: &[Scalar],
    kind: OperatorKind,
    budget: u64,
    threads: usize,
) -> Result<Vec<Matrix>> {
    if candidates.is_empty() {
        return Err(Error::Parse("candidate pool is empty".into()));
    }
    let n = alg.dim();
    let slots = n * n;
    let needed = BigUint::from(candidates.len()).pow(slots as u32);
    if needed > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let total = needed.to_u64().expect("within budget, fits u64");
    if total == 0 {
        return Ok(Vec::new());
    }

    let build = |idx: u64| -> Matrix {
        let base = candidates.len() as u64;
        let mut digits = vec![0usize; slots];
        let mut rest = idx;
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as usize;
            rest /= base;
        }
        Matrix::from_fn(n, n, |i, j| candidates[digits[i * n + j]].clone())
    };

    let scan = |from: u64, to: u64| -> Vec<Matrix> {
        (from..to)
            .map(build)
            .filter(|m| operator_passes(alg, m, kind))
            .collect()
    };

    let max_workers = usize::try_from(total).unwrap_or(usize::MAX);
    let threads = threads.clamp(1, max_workers);
    if threads <= 1 {
        return Ok(scan(0, total));
    }
    let chunk = total.div_ceil(threads as u64);
    let mut out = Vec::new();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|t| {
                let from = t * chunk;
                let to = ((t + 1) * chunk).min(total);
                s.spawn(move || if from < to { scan(from, to) } else { Vec::new() })
            })
            .collect();
        for h in handles {
            out.extend(h.join().expect("search worker panicked"));
        }
    });
    Ok(out)
}

/// Early-exit pass/fail used by the search loop; shares the bracket
/// evaluation paths with the reporting checkers.
fn operator_passes(alg: &LYAlgebra, m: &Matrix, kind: OperatorKind) -> bool {
    // The reporting checkers stop adding witnesses at the cap but still
    // scan everything; for search volume we only need the first failure.
    // A cap-1 builder would still allocate, so call the cheap paths here.
    let n = alg.dim();
    let mc: Vec<Vec<Scalar>> = (0..n).map(|i| m.col(i)).collect();
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    match kind {
        OperatorKind::ModifiedRotaBaxter => {
            for i in 0..n {
                for j in 0..n {
                    let lhs = alg.b2(&mc[i], &mc[j]);
                    let inner = vec_add(&alg.b2(&mc[i], &units[j]), &alg.b2(&units[i], &mc[j]));
                    let rhs = vec_sub(&m.apply(&inner), alg.binary_const(i, j));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let lhs = alg.b3(&mc[i], &mc[j], &mc[k]);
                        let mut inner = alg.b3(&units[i], &mc[j], &mc[k]);
                        crate::scalar::vec_add_assign(&mut inner, &alg.b3(&mc[i], &units[j], &mc[k]));
                        crate::scalar::vec_add_assign(&mut inner, &alg.b3(&mc[i], &mc[j], &units[k]));
                        crate::scalar::vec_add_assign(&mut inner, alg.ternary_const(i, j, k));
                        let mut rhs = m.apply(&inner);
                        crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&mc[i], &units[j], &units[k]));
                        crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&units[i], &mc[j], &units[k]));
                        crate::scalar::vec_sub_assign(&mut rhs, &alg.b3(&units[i], &units[j], &mc[k]));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
            true
        }
        OperatorKind::RotaBaxterWeightM1 => check_rb_weight_m1(alg, m)
            .map(|r| r.passed)
            .unwrap_or(false),
        OperatorKind::Nijenhuis => check_nijenhuis(alg, m).map(|r| r.passed).unwrap_or(false),
    }
}

/// A Lie-Yamaguti algebra paired with a modified Rota-Baxter operator.
/// Construction validates both halves, so a value of this type is evidence
/// that the axioms and the operator identities hold.
#[derive(Clone, Debug)]
pub struct MrblyAlgebra {
    algebra: LYAlgebra,
    operator: Matrix,
}

impl MrblyAlgebra {
    pub fn new(algebra: LYAlgebra, operator: Matrix) -> Result<Self> {
        let report = algebra.check_ly_axioms();
        if !report.passed {
            return Err(Error::PreconditionFailed {
                check: "Lie-Yamaguti axioms",
                report,
            });
        }
        let report = check_modified_rb(&algebra, &operator)?;
        if !report.passed {
            return Err(Error::PreconditionFailed {
                check: "modified Rota-Baxter identity",
                report,
            });
        }
        Ok(MrblyAlgebra { algebra, operator })
    }

    pub fn algebra(&self) -> &LYAlgebra {
        &self.algebra
    }

    pub fn operator(&self) -> &Matrix {
        &self.operator
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Morphism check for algebras with operators: bracket preservation plus
/// the intertwining condition phi . R_src = R_dst . phi.
pub fn check_mrbly_homomorphism(
    src: &MrblyAlgebra,
    dst: &MrblyAlgebra,
    phi: &Matrix,
) -> Result<AxiomReport> {
    let bracket_report = crate::algebra::check_homomorphism(src.algebra(), dst.algebra(), phi)?;
    let lhs = phi.matmul(src.operator());
    let rhs = dst.operator().matmul(phi);
    let mut b = ReportBuilder::new();
    for j in 0..src.dim() {
        let l = lhs.col(j);
        let r = rhs.col(j);
        if l != r {
            b.record("hom-operator", &[j], l, r);
        }
    }
    Ok(AxiomReport::merge([bracket_report, b.finish()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn two_dim() -> LYAlgebra {
        LYAlgebra::from_entries(
            2,
            &[(0, 1, vec![int(1), int(0)])],
            &[(0, 1, 1, vec![int(1), int(0)])],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_modified_rb() {
        let a = two_dim();
        assert!(check_modified_rb(&a, &Matrix::identity(2)).unwrap().passed);
    }

    #[test]
    fn family_member_is_modified_rb() {
        // Upper-triangular [[1,3],[0,2]] (family with k1 = 3, k = 2).
        let a = two_dim();
        let r = Matrix::from_i64(&[&[1, 3], &[0, 2]]);
        let rep = check_modified_rb(&a, &r).unwrap();
        assert!(rep.passed, "{rep}");
    }

    /// Frozen oracle: R = 0 fails the binary identity at (e0, e1) with
    /// lhs [0,0] = 0 and rhs R(...) - [e0,e1] = -e0.
    #[test]
    fn zero_operator_fails_with_witness() {
        let a = two_dim();
        let rep = check_modified_rb(&a, &Matrix::zeros(2, 2)).unwrap();
        assert!(!rep.passed);
        let v = &rep.violations[0];
        assert_eq!(v.axiom, "mrb-binary");
        assert_eq!(v.indices, vec![0, 1]);
        assert_eq!(v.left, vec![int(0), int(0)]);
        assert_eq!(v.right, vec![int(-1), int(0)]);
    }

    #[test]
    fn weight_m1_trivial_cases() {
        let a = two_dim();
        assert!(check_rb_weight_m1(&a, &Matrix::identity(2)).unwrap().passed);
        assert!(check_rb_weight_m1(&a, &Matrix::zeros(2, 2)).unwrap().passed);
    }

    /// Frozen oracle: T = 2·id fails the weight -1 binary identity at
    /// (e0,e1): lhs [2e0,2e1] = 4e0, rhs T(2e0 + 2e0 - e0) = 6e0.
    #[test]
    fn doubled_identity_fails_weight_m1() {
        let a = two_dim();
        let t = Matrix::from_i64(&[&[2, 0], &[0, 2]]);
        let rep = check_rb_weight_m1(&a, &t).unwrap();
        assert!(!rep.passed);
        let v = &rep.violations[0];
        assert_eq!(v.axiom, "rbm1-binary");
        assert_eq!(v.indices, vec![0, 1]);
        assert_eq!(v.left, vec![int(4), int(0)]);
        assert_eq!(v.right, vec![int(6), int(0)]);
    }

    #[test]
    fn nijenhuis_trivial_cases() {
        let a = two_dim();
        assert!(check_nijenhuis(&a, &Matrix::identity(2)).unwrap().passed);
        assert!(check_nijenhuis(&a, &Matrix::zeros(2, 2)).unwrap().passed);
    }

    #[test]
    fn involutive_mrb_operator_is_nijenhuis() {
        // diag(1,-1) squares to the identity and is in the operator family
        // (k1 = 0, k = -1), so it must pass both checks.
        let a = two_dim();
        let nop = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert!((&nop * &nop).is_identity());
        assert!(check_modified_rb(&a, &nop).unwrap().passed);
        assert!(check_nijenhuis(&a, &nop).unwrap().passed);
    }

    #[test]
    fn modified_from_rb_trivial_images() {
        assert!(modified_from_rb(&Matrix::identity(3)).unwrap().is_identity());
        let neg_id = modified_from_rb(&Matrix::zeros(2, 2)).unwrap();
        assert_eq!(neg_id, Matrix::from_i64(&[&[-1, 0], &[0, -1]]));
        // -id passes whenever id does (here: on the 2-dim example).
        assert!(check_modified_rb(&two_dim(), &neg_id).unwrap().passed);
    }

    /// Frozen oracle: with R = id the descendant doubles the binary bracket
    /// and quadruples the ternary one.
    #[test]
    fn descendant_under_identity() {
        let a = two_dim();
        let d = descendant(&a, &Matrix::identity(2)).unwrap();
        assert_eq!(d.binary_const(0, 1), &[int(2), int(0)][..]);
        assert_eq!(d.ternary_const(0, 1, 1), &[int(4), int(0)][..]);
        assert!(d.check_ly_axioms().passed);
        // R stays modified Rota-Baxter on its own descendant.
        assert!(check_modified_rb(&d, &Matrix::identity(2)).unwrap().passed);
    }

    #[test]
    fn descendant_under_negated_identity_negates_binary_only() {
        // Each binary term carries one R, so the sign flips; every ternary
        // term carries an even number of R's, so those are unchanged.
        let a = two_dim();
        let id = Matrix::identity(2);
        let d1 = descendant(&a, &id).unwrap();
        let d2 = descendant(&a, &-&id).unwrap();
        assert_eq!(d2.binary_const(0, 1), &[int(-2), int(0)][..]);
        assert_eq!(d1.ternary_const(0, 1, 1), d2.ternary_const(0, 1, 1));
        assert!(d2.check_ly_axioms().passed);
    }

    #[test]
    fn descendant_refuses_non_mrb_operator() {
        let a = two_dim();
        match descendant(&a, &Matrix::zeros(2, 2)) {
            Err(Error::PreconditionFailed { check, .. }) => {
                assert_eq!(check, "modified Rota-Baxter identity")
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn search_finds_family_members_in_order() {
        let a = two_dim();
        let pool: Vec<Scalar> = [0, 1, 2, 3].map(int).to_vec();
        let found = search_operators(&a, &pool, OperatorKind::ModifiedRotaBaxter, 1 << 20).unwrap();
        let id = Matrix::identity(2);
        let k13 = Matrix::from_i64(&[&[1, 3], &[0, 2]]);
        let proj = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        for want in [&id, &k13, &proj] {
            assert!(found.contains(want), "missing {want:?}");
        }
        // Deterministic enumeration order, independent of thread count.
        let threaded =
            search_operators_with_threads(&a, &pool, OperatorKind::ModifiedRotaBaxter, 1 << 20, 3)
                .unwrap();
        assert_eq!(found, threaded);
    }

    #[test]
    fn search_zero_pool_is_empty_and_budget_is_enforced() {
        let a = two_dim();
        let zeros = vec![int(0)];
        let found = search_operators(&a, &zeros, OperatorKind::ModifiedRotaBaxter, 16).unwrap();
        assert!(found.is_empty(), "zero map fails the binary identity");
        let pool: Vec<Scalar> = [0, 1].map(int).to_vec();
        match search_operators(&a, &pool, OperatorKind::ModifiedRotaBaxter, 3) {
            Err(Error::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, BigUint::from(16u32));
                assert_eq!(budget, 3);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn single_candidate_pool() {
        // Only candidate is the all-ones matrix; it is included iff it passes.
        let a = two_dim();
        let found = search_operators(&a, &[int(1)], OperatorKind::ModifiedRotaBaxter, 16).unwrap();
        let ones = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let passes = check_modified_rb(&a, &ones).unwrap().passed;
        assert_eq!(found.contains(&ones), passes);
        assert_eq!(found.len(), usize::from(passes));
    }

    #[test]
    fn mrbly_constructor_validates() {
        let a = two_dim();
        assert!(MrblyAlgebra::new(a.clone(), Matrix::identity(2)).is_ok());
        assert!(matches!(
            MrblyAlgebra::new(a, Matrix::zeros(2, 2)),
            Err(Error::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn homomorphism_with_operator_intertwining() {
        let a = MrblyAlgebra::new(two_dim(), Matrix::identity(2)).unwrap();
        let id = Matrix::identity(2);
        assert!(check_mrbly_homomorphism(&a, &a, &id).unwrap().passed);
        // The zero map is a (trivial) morphism; a bracket-breaking map is not.
        assert!(check_mrbly_homomorphism(&a, &a, &Matrix::zeros(2, 2))
            .unwrap()
            .passed);
        let bad = Matrix::from_i64(&[&[2, 0], &[0, 2]]);
        assert!(!check_mrbly_homomorphism(&a, &a, &bad).unwrap().passed);
    }
}
