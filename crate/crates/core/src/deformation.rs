//! First-order deformations of a Lie-Yamaguti algebra with a modified
//! Rota-Baxter operator. A deformation direction is a triple
//! (F1, G1, R1): a candidate first-order correction to the binary bracket,
//! the ternary bracket, and the operator. It is stored as a degree-2
//! element of the total complex with adjoint coefficients, and checked
//! against the full linearized axiom system. Passing that direct system
//! implies the total-complex cocycle condition (the converse fails: the
//! linearizations of the two cyclic axioms are not visible to the
//! differential), so the verdict here is always the direct system.

use crate::cohomology::{Cochain1, TotalCochain2, TotalComplex};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operators::MrblyAlgebra;
use crate::report::{AxiomReport, ReportBuilder};
use crate::representation::Representation;
use crate::scalar::{unit, vec_add, vec_add_assign, vec_sub_assign, vec_zero, Scalar};

/// A first-order deformation direction of `(L, R)`: F1 and G1 deform the
/// brackets, R1 deforms the operator. Internally a total 2-cochain with
/// coefficients in the adjoint representation.
pub type Deformation = TotalCochain2;

/// Builds a deformation direction from wedge-indexed bracket corrections
/// and an operator correction.
pub fn deformation_from_parts(
    n: usize,
    f1: Vec<Vec<Scalar>>,
    g1: Vec<Vec<Scalar>>,
    r1: Matrix,
) -> Result<Deformation> {
    if r1.rows() != n || r1.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator correction is {}x{}, algebra dimension is {n}",
            r1.rows(),
            r1.cols()
        )));
    }
    Ok(TotalCochain2 {
        ly: crate::cohomology::Cochain2::new(n, n, f1, g1)?,
        op: Cochain1::new(r1),
    })
}

/// Checks the full linearized axiom system for a first-order deformation.
///
/// The antisymmetry requirements on F1 and G1 are structural (the wedge
/// storage cannot represent anything else). The checked identities, each
/// on all basis tuples, are the first-order parts of LY3-LY6 and of the
/// two operator identities:
///   def-ly3:  cyclic sum of [F1(x,y),z] + F1([x,y],z) + G1(x,y,z) = 0
///   def-ly4:  G1([x,y],z,a) + {F1(x,y),z,a} + (two cyclic copies in x,y,z) = 0
///   def-ly5:  G1(a,b,[x,y]) + {a,b,F1(x,y)}
///               = F1({a,b,x},y) + [G1(a,b,x),y] + F1(x,{a,b,y}) + [x,G1(a,b,y)]
///   def-ly6:  G1(a,b,{x,y,z}) + {a,b,G1(x,y,z)}
///               = G1({a,b,x},y,z) + {G1(a,b,x),y,z} + G1(x,{a,b,y},z)
///                 + {x,G1(a,b,y),z} + G1(x,y,{a,b,z}) + {x,y,G1(a,b,z)}
///   def-mrb-binary / def-mrb-ternary: the first-order parts of the
///   modified Rota-Baxter identities in (F1, G1, R1).
///
/// If the direct system passes, the triple is also verified to lie in the
/// kernel of the second total differential (the implied containment); a
/// failure there is reported as an internal error since it would mean the
/// two formulations disagree in the proven direction.
pub fn check_infinitesimal(base: &MrblyAlgebra, def: &Deformation) -> Result<AxiomReport> {
    let alg = base.algebra();
    let r = base.operator();
    let n = alg.dim();
    if def.ly.n != n || def.ly.m != n || def.op.map.rows() != n || def.op.map.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "deformation is shaped for dimension {}x{}, algebra dimension is {n}",
            def.ly.n, def.ly.m
        )));
    }
    let units: Vec<Vec<Scalar>> = (0..n).map(|i| unit(n, i)).collect();
    let rc: Vec<Vec<Scalar>> = (0..n).map(|i| r.col(i)).collect();
    let r1c: Vec<Vec<Scalar>> = (0..n).map(|i| def.op.map.col(i)).collect();
    let f1 = |x: &[Scalar], y: &[Scalar]| def.ly.eval_f(x, y);
    let g1 = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| def.ly.eval_g(x, y, z);
    let mut b = ReportBuilder::new();

    // def-ly3: cyclic sum of [F1(x,y),z] + F1([x,y],z) + G1(x,y,z).
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut sum = vec_zero(n);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    vec_add_assign(&mut sum, &alg.b2(&f1(&units[x], &units[y]), &units[z]));
                    vec_add_assign(&mut sum, &f1(alg.binary_const(x, y), &units[z]));
                    vec_add_assign(&mut sum, &g1(&units[x], &units[y], &units[z]));
                }
                b.check("def-ly3", &[i, j, k], &sum, &vec_zero(n));
            }
        }
    }

    // def-ly4: G1([x,y],z,a) + {F1(x,y),z,a} summed over cyclic (x,y,z).
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut sum = vec_zero(n);
                    for (x, y, z) in [(i, j, k), (k, i, j), (j, k, i)] {
                        vec_add_assign(&mut sum, &g1(alg.binary_const(x, y), &units[z], &units[l]));
                        vec_add_assign(
                            &mut sum,
                            &alg.b3(&f1(&units[x], &units[y]), &units[z], &units[l]),
                        );
                    }
                    b.check("def-ly4", &[i, j, k, l], &sum, &vec_zero(n));
                }
            }
        }
    }

    // def-ly5 at (a,b,x,y).
    for a in 0..n {
        for bb in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let mut lhs = g1(&units[a], &units[bb], alg.binary_const(x, y));
                    vec_add_assign(&mut lhs, &alg.b3v3(a, bb, &f1(&units[x], &units[y])));
                    let mut rhs = f1(alg.ternary_const(a, bb, x), &units[y]);
                    vec_add_assign(
                        &mut rhs,
                        &alg.b2(&g1(&units[a], &units[bb], &units[x]), &units[y]),
                    );
                    vec_add_assign(&mut rhs, &f1(&units[x], alg.ternary_const(a, bb, y)));
                    vec_add_assign(
                        &mut rhs,
                        &alg.b2(&units[x], &g1(&units[a], &units[bb], &units[y])),
                    );
                    b.check("def-ly5", &[a, bb, x, y], &lhs, &rhs);
                }
            }
        }
    }

    // def-ly6 at (a,b,x,y,z).
    for a in 0..n {
        for bb in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut lhs =
                            g1(&units[a], &units[bb], alg.ternary_const(x, y, z));
                        vec_add_assign(
                            &mut lhs,
                            &alg.b3v3(a, bb, &g1(&units[x], &units[y], &units[z])),
                        );
                        let gx = g1(&units[a], &units[bb], &units[x]);
                        let gy = g1(&units[a], &units[bb], &units[y]);
                        let gz = g1(&units[a], &units[bb], &units[z]);
                        let mut rhs = g1(alg.ternary_const(a, bb, x), &units[y], &units[z]);
                        vec_add_assign(&mut rhs, &alg.b3(&gx, &units[y], &units[z]));
                        vec_add_assign(
                            &mut rhs,
                            &g1(&units[x], alg.ternary_const(a, bb, y), &units[z]),
                        );
                        vec_add_assign(&mut rhs, &alg.b3(&units[x], &gy, &units[z]));
                        vec_add_assign(
                            &mut rhs,
                            &g1(&units[x], &units[y], alg.ternary_const(a, bb, z)),
                        );
                        vec_add_assign(&mut rhs, &alg.b3(&units[x], &units[y], &gz));
                        b.check("def-ly6", &[a, bb, x, y, z], &lhs, &rhs);
                    }
                }
            }
        }
    }

    // def-mrb-binary at (x,y).
    for i in 0..n {
        for j in 0..n {
            let mut lhs = f1(&rc[i], &rc[j]);
            vec_add_assign(&mut lhs, &alg.b2(&r1c[i], &rc[j]));
            vec_add_assign(&mut lhs, &alg.b2(&rc[i], &r1c[j]));

            let br = vec_add(&alg.b2(&rc[i], &units[j]), &alg.b2(&units[i], &rc[j]));
            let mut rhs = def.op.map.apply(&br);
            let f_mixed = vec_add(&f1(&rc[i], &units[j]), &f1(&units[i], &rc[j]));
            vec_add_assign(&mut rhs, &r.apply(&f_mixed));
            let b1 = vec_add(&alg.b2(&r1c[i], &units[j]), &alg.b2(&units[i], &r1c[j]));
            vec_add_assign(&mut rhs, &r.apply(&b1));
            vec_sub_assign(&mut rhs, &f1(&units[i], &units[j]));
            b.check("def-mrb-binary", &[i, j], &lhs, &rhs);
        }
    }

    // def-mrb-ternary at (x,y,z).
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = g1(&rc[i], &rc[j], &rc[k]);
                vec_add_assign(&mut lhs, &alg.b3(&r1c[i], &rc[j], &rc[k]));
                vec_add_assign(&mut lhs, &alg.b3(&rc[i], &r1c[j], &rc[k]));
                vec_add_assign(&mut lhs, &alg.b3(&rc[i], &rc[j], &r1c[k]));

                let mut two_r = alg.b3(&units[i], &rc[j], &rc[k]);
                vec_add_assign(&mut two_r, &alg.b3(&rc[i], &units[j], &rc[k]));
                vec_add_assign(&mut two_r, &alg.b3(&rc[i], &rc[j], &units[k]));
                let mut rhs = def.op.map.apply(&two_r);

                let mut g_two_r = g1(&units[i], &rc[j], &rc[k]);
                vec_add_assign(&mut g_two_r, &g1(&rc[i], &units[j], &rc[k]));
                vec_add_assign(&mut g_two_r, &g1(&rc[i], &rc[j], &units[k]));
                vec_add_assign(&mut rhs, &r.apply(&g_two_r));

                let mut one_r1 = alg.b3(&units[i], &r1c[j], &rc[k]);
                vec_add_assign(&mut one_r1, &alg.b3(&r1c[i], &units[j], &rc[k]));
                vec_add_assign(&mut one_r1, &alg.b3(&r1c[i], &rc[j], &units[k]));
                vec_add_assign(&mut one_r1, &alg.b3(&units[i], &rc[j], &r1c[k]));
                vec_add_assign(&mut one_r1, &alg.b3(&rc[i], &units[j], &r1c[k]));
                vec_add_assign(&mut one_r1, &alg.b3(&rc[i], &r1c[j], &units[k]));
                vec_add_assign(&mut rhs, &r.apply(&one_r1));

                vec_add_assign(&mut rhs, &def.op.map.apply(alg.ternary_const(i, j, k)));
                vec_add_assign(&mut rhs, &r.apply(&g1(&units[i], &units[j], &units[k])));

                vec_sub_assign(&mut rhs, &g1(&rc[i], &units[j], &units[k]));
                vec_sub_assign(&mut rhs, &g1(&units[i], &rc[j], &units[k]));
                vec_sub_assign(&mut rhs, &g1(&units[i], &units[j], &rc[k]));
                vec_sub_assign(&mut rhs, &alg.b3(&r1c[i], &units[j], &units[k]));
                vec_sub_assign(&mut rhs, &alg.b3(&units[i], &r1c[j], &units[k]));
                vec_sub_assign(&mut rhs, &alg.b3(&units[i], &units[j], &r1c[k]));
                b.check("def-mrb-ternary", &[i, j, k], &lhs, &rhs);
            }
        }
    }

    let report = b.finish();
    if report.passed {
        // Implied containment: a triple passing the direct system must be
        // a cocycle of the total complex with adjoint coefficients.
        let adjoint = Representation::adjoint(alg);
        let tc = TotalComplex::new(&adjoint, r, r)?;
        if !tc.is_cocycle2(def) {
            return Err(Error::Internal(
                "direct deformation equations passed but the total cocycle condition failed"
                    .into(),
            ));
        }
    }
    Ok(report)
}

/// The deformation direction generated by a degree-1 cochain N: L -> L,
/// i.e. the first total differential of N. Directions of this shape are
/// exactly the trivial (first-order) deformations.
pub fn trivial_deformation(base: &MrblyAlgebra, nmap: &Matrix) -> Result<Deformation> {
    let alg = base.algebra();
    if nmap.rows() != alg.dim() || nmap.cols() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "generator is {}x{}, algebra dimension is {}",
            nmap.rows(),
            nmap.cols(),
            alg.dim()
        )));
    }
    let adjoint = Representation::adjoint(alg);
    let tc = TotalComplex::new(&adjoint, base.operator(), base.operator())?;
    Ok(tc.d1(&Cochain1::new(nmap.clone())))
}

/// Are two deformation directions equivalent, i.e. does their difference
/// arise from a degree-1 generator? Returns the generator if so.
pub fn deformations_equivalent(
    base: &MrblyAlgebra,
    a: &Deformation,
    b: &Deformation,
) -> Result<Option<Matrix>> {
    let adjoint = Representation::adjoint(base.algebra());
    let tc = TotalComplex::new(&adjoint, base.operator(), base.operator())?;
    Ok(tc.cohomologous_witness(a, b).map(|h| h.map))
}

/// Cohomological rigidity: the second total cohomology with adjoint
/// coefficients vanishes, so every total 2-cocycle (in particular every
/// first-order deformation direction) is a total coboundary.
pub fn is_rigid(base: &MrblyAlgebra) -> Result<bool> {
    let adjoint = Representation::adjoint(base.algebra());
    let report = crate::cohomology::total_cohomology(&adjoint, base.operator(), base.operator())?;
    Ok(report.h2_dim == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LYAlgebra;
    use crate::cohomology::{wedge_count, Cochain2};
    use crate::scalar::int;

    fn two_dim_mrbly() -> MrblyAlgebra {
        let alg = LYAlgebra::from_entries(
            2,
            &[(0, 1, vec![int(1), int(0)])],
            &[(0, 1, 1, vec![int(1), int(0)])],
        )
        .unwrap();
        MrblyAlgebra::new(alg, Matrix::from_i64(&[&[1, 3], &[0, 2]])).unwrap()
    }

    #[test]
    fn zero_deformation_passes() {
        let base = two_dim_mrbly();
        let def = TotalCochain2::zero(2, 2);
        let report = check_infinitesimal(&base, &def).unwrap();
        assert!(report.passed, "{report}");
    }

    /// Trivial deformations (first total differentials) satisfy the whole
    /// linearized system: they are the directions cut out by conjugating
    /// the structure with id + t N.
    #[test]
    fn trivial_deformations_pass() {
        let base = two_dim_mrbly();
        for nmap in [
            Matrix::from_i64(&[&[1, 2], &[3, 4]]),
            Matrix::from_i64(&[&[0, -1], &[5, 0]]),
            Matrix::from_i64(&[&[2, 0], &[7, -3]]),
        ] {
            let def = trivial_deformation(&base, &nmap).unwrap();
            let report = check_infinitesimal(&base, &def).unwrap();
            assert!(report.passed, "generator {nmap:?}: {report}");
            let witness = deformations_equivalent(&base, &def, &TotalCochain2::zero(2, 2))
                .unwrap()
                .expect("trivial deformation must be equivalent to zero");
            let again = trivial_deformation(&base, &witness).unwrap();
            assert_eq!(again, def);
        }
    }

    /// Frozen oracle: on the 2-dim example with R = id, the pure operator
    /// perturbation R1 = E00 (F1 = G1 = 0) violates the linearized binary
    /// operator identity at (e0,e1) with lhs e0 and rhs 3e0.
    #[test]
    fn operator_only_perturbation_fails_with_witness() {
        let alg = LYAlgebra::from_entries(
            2,
            &[(0, 1, vec![int(1), int(0)])],
            &[(0, 1, 1, vec![int(1), int(0)])],
        )
        .unwrap();
        let base = MrblyAlgebra::new(alg, Matrix::identity(2)).unwrap();
        let def = deformation_from_parts(
            2,
            vec![vec_zero(2); 1],
            vec![vec_zero(2); 2],
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
        )
        .unwrap();
        let report = check_infinitesimal(&base, &def).unwrap();
        assert!(!report.passed);
        let v = &report.violations[0];
        assert_eq!(v.axiom, "def-mrb-binary");
        assert_eq!(v.indices, vec![0, 1]);
        assert_eq!(v.left, vec![int(1), int(0)]);
        assert_eq!(v.right, vec![int(3), int(0)]);
    }

    /// The direct system is strictly stronger than the cocycle condition:
    /// on a 3-dim abelian algebra with R = 0, a cyclically asymmetric G1
    /// lies in the kernel of the total differential but fails def-ly3.
    #[test]
    fn direct_system_strictly_stronger_than_cocycle() {
        let alg = LYAlgebra::abelian(3);
        let base = MrblyAlgebra::new(alg.clone(), Matrix::zeros(3, 3)).unwrap();
        let nw = wedge_count(3);
        let mut g1 = vec![vec_zero(3); nw * 3];
        // G1(e0, e1, e2) = e0, nothing else.
        g1[crate::cohomology::wedge_index(3, 0, 1) * 3 + 2] = unit(3, 0);
        let def = TotalCochain2 {
            ly: Cochain2::new(3, 3, vec![vec_zero(3); nw], g1).unwrap(),
            op: Cochain1::zero(3, 3),
        };

        let adjoint = Representation::adjoint(&alg);
        let tc = TotalComplex::new(&adjoint, base.operator(), base.operator()).unwrap();
        assert!(tc.is_cocycle2(&def), "lies in the differential's kernel");

        let report = check_infinitesimal(&base, &def).unwrap();
        assert!(!report.passed, "fails the direct linearized system");
        let v = &report.violations[0];
        assert_eq!(v.axiom, "def-ly3");
        assert_eq!(v.indices, vec![0, 1, 2]);
        assert_eq!(v.left, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn rigidity_probe_runs() {
        // Not a rigidity claim for this algebra; just pins the plumbing:
        // the answer must agree with the H^2 dimension of the total complex.
        let base = two_dim_mrbly();
        let adjoint = Representation::adjoint(base.algebra());
        let report =
            crate::cohomology::total_cohomology(&adjoint, base.operator(), base.operator())
                .unwrap();
        assert_eq!(is_rigid(&base).unwrap(), report.h2_dim == 0);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let base = two_dim_mrbly();
        let def = TotalCochain2::zero(3, 3);
        assert!(matches!(
            check_infinitesimal(&base, &def),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
