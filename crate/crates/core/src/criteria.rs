//! Standalone solvability criteria, deliberately independent of the
//! solvers so the two sides of each equivalence can cross-validate.
//!
//! * Twisted Sylvester: `[[A,C],[0,B]]` and `[[A,0],[0,B]]` must have
//!   similar twisted adjoints over the complex field.
//! * Twisted Stein: the pencils pairing `[[A,C],[0,I]]` / `[[A,0],[0,I]]`
//!   (twisted adjoints) against the adjoint of `[[I,0],[0,B]]` must be
//!   strictly equivalent.
//! * Two-unknown equation: the two block matrices must have equal rank
//!   over the skew field.
//!
//! No function here calls a solver, and no solver consults a criterion.

use std::fmt;

use crate::equation::{EquationError, EquationInstance, EquationKind};
use crate::matrix::{block_diag, block_upper_triangular, Mat};
use crate::adjoint::QMatrix;
use crate::smith::{char_matrix, pencil_invariants, smith_normal_form, Pencil, SmithForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionMethod {
    /// Similarity of twisted adjoints, decided by Smith invariant factors.
    RothHatSimilarity,
    /// Strict equivalence of regular pencils, decided by Smith forms on
    /// the straight and reversed sides.
    WimmerHatPencilEquivalence,
    /// Equality of ranks over the skew field.
    RankEquivalence,
}

impl CriterionMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionMethod::RothHatSimilarity => "roth-hat-similarity",
            CriterionMethod::WimmerHatPencilEquivalence => "wimmer-hat-pencil-equivalence",
            CriterionMethod::RankEquivalence => "rank-equivalence",
        }
    }
}

impl fmt::Display for CriterionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The exact invariants whose comparison produced the verdict, serialized
/// for auditability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComparedInvariants {
    SmithForms {
        coupled: Vec<String>,
        split: Vec<String>,
    },
    PencilForms {
        coupled_lambda: Vec<String>,
        coupled_reversed: Vec<String>,
        split_lambda: Vec<String>,
        split_reversed: Vec<String>,
    },
    Ranks {
        coupled: usize,
        split: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub verdict: bool,
    pub method: CriterionMethod,
    pub invariants: ComparedInvariants,
}

fn require_kind(
    inst: &EquationInstance,
    expected: EquationKind,
    op: &'static str,
) -> Result<(), EquationError> {
    if inst.kind() != expected {
        return Err(EquationError::WrongKind {
            op,
            found: inst.kind(),
        });
    }
    Ok(())
}

fn invariant_factors(m: &QMatrix, aut: crate::scalar::Automorphism) -> SmithForm {
    smith_normal_form(&char_matrix(&m.twisted_adjoint(aut)))
}

/// Solvability criterion for `A·X - X̂·B = C`: similarity over the complex
/// field of the twisted adjoints of `[[A,C],[0,B]]` and `[[A,0],[0,B]]`.
pub fn check_roth_hat(inst: &EquationInstance) -> Result<CriterionReport, EquationError> {
    require_kind(inst, EquationKind::SylvesterHat, "check_roth_hat")?;
    let coupled = block_upper_triangular(inst.a(), inst.c(), inst.b());
    let split = block_diag(inst.a(), inst.b());
    let sf_coupled = invariant_factors(&coupled, inst.aut());
    let sf_split = invariant_factors(&split, inst.aut());
    Ok(CriterionReport {
        verdict: sf_coupled == sf_split,
        method: CriterionMethod::RothHatSimilarity,
        invariants: ComparedInvariants::SmithForms {
            coupled: sf_coupled.factor_strings(),
            split: sf_split.factor_strings(),
        },
    })
}

/// Solvability criterion for `X - A·X̂·B = C`: strict equivalence of the
/// pencils `x·adj([[I,0],[0,B]]) + twisted([[A,C],[0,I]])` and
/// `x·adj([[I,0],[0,B]]) + twisted([[A,0],[0,I]])`.
pub fn check_wimmer_hat(inst: &EquationInstance) -> Result<CriterionReport, EquationError> {
    require_kind(inst, EquationKind::SteinHat, "check_wimmer_hat")?;
    let id_m: QMatrix = Mat::identity(inst.m());
    let id_n: QMatrix = Mat::identity(inst.n());
    let leading = block_diag(&id_m, inst.b()).complex_adjoint();
    let coupled = Pencil::new(
        leading.clone(),
        block_upper_triangular(inst.a(), inst.c(), &id_n).twisted_adjoint(inst.aut()),
    );
    let split = Pencil::new(
        leading,
        block_diag(inst.a(), &id_n).twisted_adjoint(inst.aut()),
    );
    // These pencils are always regular: a block permutation makes them
    // upper block triangular with one monic block and one block that is
    // nonsingular at x = 0. A non-regular pencil would mean a broken
    // construction, reported distinctly rather than as a verdict.
    let inv_coupled = pencil_invariants(&coupled, "coupled").map_err(|_| {
        EquationError::NonRegularPencil { which: "coupled" }
    })?;
    let inv_split = pencil_invariants(&split, "split").map_err(|_| {
        EquationError::NonRegularPencil { which: "split" }
    })?;
    Ok(CriterionReport {
        verdict: inv_coupled == inv_split,
        method: CriterionMethod::WimmerHatPencilEquivalence,
        invariants: ComparedInvariants::PencilForms {
            coupled_lambda: inv_coupled.0.factor_strings(),
            coupled_reversed: inv_coupled.1.factor_strings(),
            split_lambda: inv_split.0.factor_strings(),
            split_reversed: inv_split.1.factor_strings(),
        },
    })
}

/// Solvability criterion for `A·X - Y·B = C`: the block matrices
/// `[[A,C],[0,B]]` and `[[A,0],[0,B]]` have equal rank over the skew field.
pub fn check_rank_equivalence(inst: &EquationInstance) -> Result<CriterionReport, EquationError> {
    require_kind(inst, EquationKind::TwoSided, "check_rank_equivalence")?;
    let coupled = block_upper_triangular(inst.a(), inst.c(), inst.b()).rank_h();
    let split = block_diag(inst.a(), inst.b()).rank_h();
    Ok(CriterionReport {
        verdict: coupled == split,
        method: CriterionMethod::RankEquivalence,
        invariants: ComparedInvariants::Ranks { coupled, split },
    })
}

/// Dispatches to the criterion matching the instance kind.
pub fn run_criterion(inst: &EquationInstance) -> Result<CriterionReport, EquationError> {
    match inst.kind() {
        EquationKind::SylvesterHat => check_roth_hat(inst),
        EquationKind::SteinHat => check_wimmer_hat(inst),
        EquationKind::TwoSided => check_rank_equivalence(inst),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::equation::solve_equation;
    use crate::scalar::{Automorphism, Quaternion};
    use crate::smith::{similar_over_c, strictly_equivalent_pencils};

    fn one_by_one(q: Quaternion) -> QMatrix {
        Mat::from_rows(vec![vec![q]])
    }

    fn inst(
        kind: EquationKind,
        a: QMatrix,
        b: QMatrix,
        c: QMatrix,
        aut: Automorphism,
    ) -> EquationInstance {
        EquationInstance::new(kind, a, b, c, aut).unwrap()
    }

    #[test]
    fn roth_rejects_nilpotent_vs_zero() {
        for aut in [Automorphism::IDENTITY, Automorphism::NEGATE_JK] {
            let i = inst(
                EquationKind::SylvesterHat,
                one_by_one(Quaternion::zero()),
                one_by_one(Quaternion::zero()),
                one_by_one(Quaternion::one()),
                aut,
            );
            let report = check_roth_hat(&i).unwrap();
            assert!(!report.verdict);
            assert!(!solve_equation(&i).is_solvable());
        }
    }

    #[test]
    fn roth_accepts_constructed_solvable() {
        let aut = Automorphism::NEGATE_JK;
        let a = Mat::from_rows(vec![
            vec![Quaternion::from_ints(1, 0, 2, 0), Quaternion::from_ints(0, 1, 0, 1)],
            vec![Quaternion::from_ints(0, 0, 1, 0), Quaternion::from_ints(2, 0, 0, 0)],
        ]);
        let b = Mat::from_rows(vec![
            vec![Quaternion::from_ints(0, 1, 1, 0), Quaternion::from_ints(1, 0, 0, 0)],
            vec![Quaternion::from_ints(0, 0, 0, 2), Quaternion::from_ints(1, 1, 0, 0)],
        ]);
        let x0 = Mat::from_rows(vec![
            vec![Quaternion::from_ints(0, 1, 0, 2), Quaternion::from_ints(1, 0, 1, 0)],
            vec![Quaternion::from_ints(2, 0, 0, 0), Quaternion::from_ints(0, 1, 1, 1)],
        ]);
        let c = &(&a * &x0) - &(&x0.hat(aut) * &b);
        let i = inst(EquationKind::SylvesterHat, a, b, c, aut);
        let report = check_roth_hat(&i).unwrap();
        assert!(report.verdict);
        assert!(solve_equation(&i).is_solvable());
    }

    #[test]
    fn roth_scalar_negating_hat() {
        let i = inst(
            EquationKind::SylvesterHat,
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::unit_j()),
            Automorphism::NEGATE_JK,
        );
        assert!(check_roth_hat(&i).unwrap().verdict);
        assert!(solve_equation(&i).is_solvable());
    }

    #[test]
    fn roth_verdict_matches_direct_similarity_test() {
        let aut = Automorphism::NEGATE_JK;
        let i = inst(
            EquationKind::SylvesterHat,
            one_by_one(Quaternion::unit_i()),
            one_by_one(Quaternion::unit_k()),
            one_by_one(Quaternion::from_ints(1, 2, 3, 4)),
            aut,
        );
        let report = check_roth_hat(&i).unwrap();
        let coupled = block_upper_triangular(i.a(), i.c(), i.b()).twisted_adjoint(aut);
        let split = block_diag(i.a(), i.b()).twisted_adjoint(aut);
        assert_eq!(report.verdict, similar_over_c(&coupled, &split));
    }

    #[test]
    fn wimmer_scalar_examples() {
        // x - x·1·1 = 1 has no solution under the identity automorphism
        let unsat = inst(
            EquationKind::SteinHat,
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::one()),
            Automorphism::IDENTITY,
        );
        assert!(!check_wimmer_hat(&unsat).unwrap().verdict);
        assert!(!solve_equation(&unsat).is_solvable());

        // C = 0 is always solvable by X = 0
        let sat = inst(
            EquationKind::SteinHat,
            one_by_one(Quaternion::unit_j()),
            one_by_one(Quaternion::from_ints(1, 2, 0, 1)),
            one_by_one(Quaternion::zero()),
            Automorphism::NEGATE_JK,
        );
        assert!(check_wimmer_hat(&sat).unwrap().verdict);
    }

    #[test]
    fn wimmer_constructed_solvable() {
        let aut = Automorphism::NEGATE_JK;
        let a = Mat::from_rows(vec![
            vec![Quaternion::from_ints(1, 1, 0, 0), Quaternion::from_ints(0, 0, 1, 0)],
            vec![Quaternion::from_ints(0, 2, 0, 1), Quaternion::from_ints(1, 0, 0, 0)],
        ]);
        let b = Mat::from_rows(vec![
            vec![Quaternion::from_ints(0, 0, 2, 0), Quaternion::from_ints(1, 1, 1, 0)],
            vec![Quaternion::from_ints(0, 1, 0, 0), Quaternion::from_ints(0, 0, 0, 1)],
        ]);
        let x0 = Mat::from_rows(vec![
            vec![Quaternion::from_ints(1, 0, 1, 0), Quaternion::from_ints(0, 1, 0, 0)],
            vec![Quaternion::from_ints(0, 0, 2, 1), Quaternion::from_ints(1, 1, 0, 1)],
        ]);
        let c = &x0 - &(&(&a * &x0.hat(aut)) * &b);
        let i = inst(EquationKind::SteinHat, a, b, c, aut);
        let report = check_wimmer_hat(&i).unwrap();
        assert!(report.verdict);
        assert!(solve_equation(&i).is_solvable());
    }

    #[test]
    fn wimmer_verdict_matches_direct_pencil_test() {
        let aut = Automorphism::NEGATE_JK;
        let i = inst(
            EquationKind::SteinHat,
            one_by_one(Quaternion::unit_j()),
            one_by_one(Quaternion::unit_j()),
            one_by_one(Quaternion::from_ints(0, 0, 1, 1)),
            aut,
        );
        let report = check_wimmer_hat(&i).unwrap();
        let id: QMatrix = Mat::identity(1);
        let leading = block_diag(&id, i.b()).complex_adjoint();
        let coupled = Pencil::new(
            leading.clone(),
            block_upper_triangular(i.a(), i.c(), &id).twisted_adjoint(aut),
        );
        let split = Pencil::new(leading, block_diag(i.a(), &id).twisted_adjoint(aut));
        assert_eq!(
            report.verdict,
            strictly_equivalent_pencils(&coupled, &split).unwrap()
        );
    }

    #[test]
    fn rank_criterion_examples() {
        // A = B = 0 with C nonzero differs in rank by rank(C)
        let unsat = inst(
            EquationKind::TwoSided,
            one_by_one(Quaternion::zero()),
            one_by_one(Quaternion::zero()),
            one_by_one(Quaternion::from_ints(0, 0, 1, 0)),
            Automorphism::IDENTITY,
        );
        let report = check_rank_equivalence(&unsat).unwrap();
        assert!(!report.verdict);
        assert_eq!(
            report.invariants,
            ComparedInvariants::Ranks {
                coupled: 1,
                split: 0
            }
        );
        assert!(!solve_equation(&unsat).is_solvable());

        // constructed solvable
        let a = one_by_one(Quaternion::from_ints(1, 2, 0, 0));
        let b = one_by_one(Quaternion::from_ints(0, 0, 3, 0));
        let x0 = one_by_one(Quaternion::from_ints(1, 0, 0, 1));
        let y0 = one_by_one(Quaternion::from_ints(0, 1, 1, 0));
        let c = &(&a * &x0) - &(&y0 * &b);
        let sat = inst(EquationKind::TwoSided, a, b, c, Automorphism::IDENTITY);
        assert!(check_rank_equivalence(&sat).unwrap().verdict);
        assert!(solve_equation(&sat).is_solvable());

        // C = 0
        let trivial = inst(
            EquationKind::TwoSided,
            one_by_one(Quaternion::unit_i()),
            one_by_one(Quaternion::unit_k()),
            one_by_one(Quaternion::zero()),
            Automorphism::IDENTITY,
        );
        assert!(check_rank_equivalence(&trivial).unwrap().verdict);
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let i = inst(
            EquationKind::TwoSided,
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::one()),
            one_by_one(Quaternion::one()),
            Automorphism::IDENTITY,
        );
        assert!(check_roth_hat(&i).is_err());
        assert!(check_wimmer_hat(&i).is_err());
        assert!(check_rank_equivalence(&i).is_ok());
        assert!(run_criterion(&i).is_ok());
    }
}
