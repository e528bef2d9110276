//! Constructive witnesses for the solvability criteria, and the
//! change-of-variables transport between equivalent instances.
//!
//! Each equation kind has an explicit nonsingular witness built from a
//! solution: upper-unitriangular block matrices whose off-diagonal block
//! is (a hat of) the solution. Verification re-checks the defining block
//! identities exactly, never trusting the construction.

use crate::adjoint::QMatrix;
use crate::equation::{EquationError, EquationInstance, EquationKind, Solution};
use crate::matrix::{block_diag, block_upper_triangular, Mat};
use crate::scalar::Automorphism;

/// The nonsingular matrices exhibiting solvability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `Ŝ⁻¹·[[A,C],[0,B]]·S = [[A,0],[0,B]]`.
    SylvesterHat { s: QMatrix },
    /// `[[A,C],[0,I]]·R = Ŝ·[[A,0],[0,I]]` and `[[I,0],[0,B]]·R = S·[[I,0],[0,B]]`.
    SteinHat { s: QMatrix, r: QMatrix },
    /// `L·[[A,0],[0,B]]·R = [[A,C],[0,B]]`.
    TwoSided { left: QMatrix, right: QMatrix },
}

impl Witness {
    pub fn kind(&self) -> EquationKind {
        match self {
            Witness::SylvesterHat { .. } => EquationKind::SylvesterHat,
            Witness::SteinHat { .. } => EquationKind::SteinHat,
            Witness::TwoSided { .. } => EquationKind::TwoSided,
        }
    }
}

/// Upper-unitriangular `[[I, top_right], [0, I]]`; nonsingular by shape.
fn unitriangular(top_right: &QMatrix) -> QMatrix {
    let m = top_right.rows();
    let n = top_right.cols();
    block_upper_triangular(&Mat::identity(m), top_right, &Mat::identity(n))
}

/// Builds the proof witnesses from an exact solution. Rejects a candidate
/// whose residual is not exactly zero.
pub fn build_witness(inst: &EquationInstance, sol: &Solution) -> Result<Witness, EquationError> {
    if !inst.residual(sol)?.is_zero() {
        return Err(EquationError::NonzeroResidual);
    }
    Ok(match (inst.kind(), sol) {
        (EquationKind::SylvesterHat, Solution::Single(x)) => Witness::SylvesterHat {
            s: unitriangular(&-x),
        },
        (EquationKind::SteinHat, Solution::Single(x)) => {
            let x_hat = x.hat(inst.aut());
            Witness::SteinHat {
                s: unitriangular(&x_hat),
                r: unitriangular(&(&x_hat * inst.b())),
            }
        }
        (EquationKind::TwoSided, Solution::Pair { x, y }) => Witness::TwoSided {
            left: unitriangular(&-y),
            right: unitriangular(x),
        },
        _ => unreachable!("residual already validated the solution shape"),
    })
}

fn check_witness_shape(
    field: &'static str,
    expected: usize,
    m: &QMatrix,
) -> Result<(), EquationError> {
    if m.shape() != (expected, expected) {
        return Err(EquationError::Shape {
            field,
            expected: (expected, expected),
            found: m.shape(),
        });
    }
    Ok(())
}

/// Checks the defining block identities exactly. Returns `false` on any
/// inequality or a singular witness; shape and kind mismatches are errors.
pub fn verify_witness(inst: &EquationInstance, w: &Witness) -> Result<bool, EquationError> {
    if w.kind() != inst.kind() {
        return Err(EquationError::WrongKind {
            op: "verify_witness with this witness shape",
            found: inst.kind(),
        });
    }
    let size = inst.m() + inst.n();
    let aut = inst.aut();
    match w {
        Witness::SylvesterHat { s } => {
            check_witness_shape("S", size, s)?;
            if !s.is_nonsingular_h() {
                return Ok(false);
            }
            let coupled = block_upper_triangular(inst.a(), inst.c(), inst.b());
            let split = block_diag(inst.a(), inst.b());
            Ok(&coupled * s == &s.hat(aut) * &split)
        }
        Witness::SteinHat { s, r } => {
            check_witness_shape("S", size, s)?;
            check_witness_shape("R", size, r)?;
            if !s.is_nonsingular_h() || !r.is_nonsingular_h() {
                return Ok(false);
            }
            let id_m: QMatrix = Mat::identity(inst.m());
            let id_n: QMatrix = Mat::identity(inst.n());
            let first = &block_upper_triangular(inst.a(), inst.c(), &id_n) * r
                == &s.hat(aut) * &block_diag(inst.a(), &id_n);
            let b_block = block_diag(&id_m, inst.b());
            let second = &b_block * r == s * &b_block;
            Ok(first && second)
        }
        Witness::TwoSided { left, right } => {
            check_witness_shape("left witness", size, left)?;
            check_witness_shape("right witness", size, right)?;
            if !left.is_nonsingular_h() || !right.is_nonsingular_h() {
                return Ok(false);
            }
            let coupled = block_upper_triangular(inst.a(), inst.c(), inst.b());
            let split = block_diag(inst.a(), inst.b());
            let equivalent = &(left * &split) * right == coupled;
            Ok(equivalent && coupled.rank_h() == split.rank_h())
        }
    }
}

fn inverse_or(name: &'static str, m: &QMatrix) -> Result<QMatrix, EquationError> {
    m.inverse_h()
        .ok_or(EquationError::SingularTransform { name })
}

/// Substitutes `X = P·Y·Q` and normalizes, yielding the instance in the
/// unknown `Y`:
///
/// * Sylvester kind: `(P̂⁻¹·A·P, Q̂·B·Q⁻¹, P̂⁻¹·C·Q⁻¹)`;
/// * Stein kind: `(P⁻¹·A·P̂, Q̂·B·Q⁻¹, P⁻¹·C·Q⁻¹)`.
///
/// `X` solves the original exactly when `Y = P⁻¹·X·Q⁻¹` solves the result.
pub fn change_of_variables(
    inst: &EquationInstance,
    p: &QMatrix,
    q: &QMatrix,
) -> Result<EquationInstance, EquationError> {
    if inst.kind() == EquationKind::TwoSided {
        return Err(EquationError::WrongKind {
            op: "change_of_variables",
            found: inst.kind(),
        });
    }
    if p.shape() != (inst.m(), inst.m()) {
        return Err(EquationError::Shape {
            field: "P",
            expected: (inst.m(), inst.m()),
            found: p.shape(),
        });
    }
    if q.shape() != (inst.n(), inst.n()) {
        return Err(EquationError::Shape {
            field: "Q",
            expected: (inst.n(), inst.n()),
            found: q.shape(),
        });
    }
    let aut = inst.aut();
    let q_inv = inverse_or("Q", q)?;
    let q_hat = q.hat(aut);
    let (a, c) = match inst.kind() {
        EquationKind::SylvesterHat => {
            let p_hat_inv = inverse_or("P", &p.hat(aut))?;
            (
                &(&p_hat_inv * inst.a()) * p,
                &(&p_hat_inv * inst.c()) * &q_inv,
            )
        }
        EquationKind::SteinHat => {
            let p_inv = inverse_or("P", p)?;
            (
                &(&p_inv * inst.a()) * &p.hat(aut),
                &(&p_inv * inst.c()) * &q_inv,
            )
        }
        EquationKind::TwoSided => unreachable!(),
    };
    let b = &(&q_hat * inst.b()) * &q_inv;
    EquationInstance::new(inst.kind(), a, b, c, aut)
}

/// Maps a solution of the transformed instance back: `X = P·Y·Q`.
pub fn pull_back_solution(p: &QMatrix, q: &QMatrix, y: &QMatrix) -> QMatrix {
    &(p * y) * q
}

/// Transports a witness of the transformed instance back to the original:
///
/// * Sylvester kind: `S = diag(P, Q⁻¹)·S'·diag(P⁻¹, Q)`;
/// * Stein kind: `R = diag(P̂, Q⁻¹)·R'·diag(P̂⁻¹, Q)` and
///   `S = diag(P̂, Q̂⁻¹)·S'·diag(P̂⁻¹, Q̂)`.
pub fn pull_back_witness(
    w: &Witness,
    p: &QMatrix,
    q: &QMatrix,
    aut: Automorphism,
) -> Result<Witness, EquationError> {
    let conjugate = |outer_left: &QMatrix,
                     outer_right: &QMatrix,
                     inner: &QMatrix,
                     inner_inv: &QMatrix,
                     w: &QMatrix| {
        let left = block_diag(outer_left, outer_right);
        let right = block_diag(inner, inner_inv);
        &(&left * w) * &right
    };
    match w {
        Witness::SylvesterHat { s } => {
            let p_inv = inverse_or("P", p)?;
            let q_inv = inverse_or("Q", q)?;
            Ok(Witness::SylvesterHat {
                s: conjugate(p, &q_inv, &p_inv, q, s),
            })
        }
        Witness::SteinHat { s, r } => {
            let p_hat = p.hat(aut);
            let q_hat = q.hat(aut);
            let p_hat_inv = inverse_or("P", &p_hat)?;
            let q_inv = inverse_or("Q", q)?;
            let q_hat_inv = inverse_or("Q", &q_hat)?;
            Ok(Witness::SteinHat {
                r: conjugate(&p_hat, &q_inv, &p_hat_inv, q, r),
                s: conjugate(&p_hat, &q_hat_inv, &p_hat_inv, &q_hat, s),
            })
        }
        Witness::TwoSided { .. } => Err(EquationError::WrongKind {
            op: "pull_back_witness",
            found: EquationKind::TwoSided,
        }),
    }
}
