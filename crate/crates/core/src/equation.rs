//! The three quaternion matrix equations and their exact solvers.
//!
//! Kinds: `A·X - X̂·B = C` (twisted Sylvester), `X - A·X̂·B = C` (twisted
//! Stein), and `A·X - Y·B = C` in two unknowns with no hat. The general
//! solver vectorizes the real-linear operator on the basis
//! `{e_st, e_st·i, e_st·j, e_st·k}` and eliminates exactly; the structured
//! solver instead follows the decoupled complex pair that exists whenever
//! `A` and `B` have complex entries, and recovers `X = Z1 + Z2·j`. The two
//! take different routes, so each is an oracle for the other.

use std::fmt;

use num_traits::{One, Zero};

use crate::adjoint::{join_complex_parts, CMatrix, QMatrix, RMatrix};
use crate::linsolve::{self, LinearSolution};
use crate::matrix::Mat;
use crate::poly::char_poly;
use crate::scalar::{Automorphism, GaussianRational, Quaternion, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquationKind {
    SylvesterHat,
    SteinHat,
    TwoSided,
}

impl EquationKind {
    pub const ALL: [EquationKind; 3] = [
        EquationKind::SylvesterHat,
        EquationKind::SteinHat,
        EquationKind::TwoSided,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EquationKind::SylvesterHat => "sylvester-hat",
            EquationKind::SteinHat => "stein-hat",
            EquationKind::TwoSided => "two-sided",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "sylvester-hat" => Some(EquationKind::SylvesterHat),
            "stein-hat" => Some(EquationKind::SteinHat),
            "two-sided" => Some(EquationKind::TwoSided),
            _ => None,
        }
    }

    /// Real dimension of the unknown space for an m x n right-hand side.
    pub fn unknown_dim(self, m: usize, n: usize) -> usize {
        match self {
            EquationKind::TwoSided => 8 * m * n,
            _ => 4 * m * n,
        }
    }
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquationError {
    WrongKind {
        op: &'static str,
        found: EquationKind,
    },
    Shape {
        field: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    SingularTransform {
        name: &'static str,
    },
    NonzeroResidual,
    NonComplexEntry {
        field: &'static str,
        row: usize,
        col: usize,
    },
    NonRegularPencil {
        which: &'static str,
    },
}

impl fmt::Display for EquationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationError::WrongKind { op, found } => {
                write!(f, "{op} does not apply to a {found} instance")
            }
            EquationError::Shape {
                field,
                expected,
                found,
            } => write!(
                f,
                "{field}: expected shape {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            EquationError::SingularTransform { name } => {
                write!(f, "{name} must be nonsingular")
            }
            EquationError::NonzeroResidual => {
                write!(f, "the supplied matrix is not an exact solution")
            }
            EquationError::NonComplexEntry { field, row, col } => {
                write!(f, "{field}[{row}][{col}] has a nonzero j or k component")
            }
            EquationError::NonRegularPencil { which } => {
                write!(f, "the {which} pencil is not regular")
            }
        }
    }
}

impl std::error::Error for EquationError {}

/// A fully validated equation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInstance {
    kind: EquationKind,
    a: QMatrix,
    b: QMatrix,
    c: QMatrix,
    aut: Automorphism,
}

impl EquationInstance {
    pub fn new(
        kind: EquationKind,
        a: QMatrix,
        b: QMatrix,
        c: QMatrix,
        aut: Automorphism,
    ) -> Result<Self, EquationError> {
        if !a.is_square() {
            return Err(EquationError::Shape {
                field: "A",
                expected: (a.rows(), a.rows()),
                found: a.shape(),
            });
        }
        if !b.is_square() {
            return Err(EquationError::Shape {
                field: "B",
                expected: (b.rows(), b.rows()),
                found: b.shape(),
            });
        }
        if c.shape() != (a.rows(), b.rows()) {
            return Err(EquationError::Shape {
                field: "C",
                expected: (a.rows(), b.rows()),
                found: c.shape(),
            });
        }
        Ok(EquationInstance { kind, a, b, c, aut })
    }

    pub fn kind(&self) -> EquationKind {
        self.kind
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn b(&self) -> &QMatrix {
        &self.b
    }

    pub fn c(&self) -> &QMatrix {
        &self.c
    }

    pub fn aut(&self) -> Automorphism {
        self.aut
    }

    /// Row count of the unknown(s).
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// Column count of the unknown(s).
    pub fn n(&self) -> usize {
        self.b.rows()
    }

    /// Left side minus right side, evaluated exactly.
    pub fn residual(&self, sol: &Solution) -> Result<QMatrix, EquationError> {
        let shape = (self.m(), self.n());
        match (self.kind, sol) {
            (EquationKind::SylvesterHat, Solution::Single(x)) => {
                check_shape("X", shape, x)?;
                Ok(&(&(&self.a * x) - &(&x.hat(self.aut) * &self.b)) - &self.c)
            }
            (EquationKind::SteinHat, Solution::Single(x)) => {
                check_shape("X", shape, x)?;
                Ok(&(x - &(&(&self.a * &x.hat(self.aut)) * &self.b)) - &self.c)
            }
            (EquationKind::TwoSided, Solution::Pair { x, y }) => {
                check_shape("X", shape, x)?;
                check_shape("Y", shape, y)?;
                Ok(&(&(&self.a * x) - &(y * &self.b)) - &self.c)
            }
            _ => Err(EquationError::WrongKind {
                op: "residual with this solution shape",
                found: self.kind,
            }),
        }
    }

    pub fn is_solution(&self, sol: &Solution) -> Result<bool, EquationError> {
        Ok(self.residual(sol)?.is_zero())
    }
}

fn check_shape(
    field: &'static str,
    expected: (usize, usize),
    m: &QMatrix,
) -> Result<(), EquationError> {
    if m.shape() != expected {
        return Err(EquationError::Shape {
            field,
            expected,
            found: m.shape(),
        });
    }
    Ok(())
}

/// Solution payload: one matrix, or the `(X, Y)` pair for the two-unknown
/// equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Single(QMatrix),
    Pair { x: QMatrix, y: QMatrix },
}

impl Solution {
    pub fn x(&self) -> &QMatrix {
        match self {
            Solution::Single(x) => x,
            Solution::Pair { x, .. } => x,
        }
    }

    pub fn y(&self) -> Option<&QMatrix> {
        match self {
            Solution::Single(_) => None,
            Solution::Pair { y, .. } => Some(y),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Solvable,
    Unsolvable,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Solvable => "solvable",
            SolveStatus::Unsolvable => "unsolvable",
        })
    }
}

/// Infeasibility certificate from whichever vectorized system failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Real(Vec<Rational>),
    Complex(Vec<GaussianRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub solution: Option<Solution>,
    /// Real dimension of the homogeneous solution set.
    pub solution_space_dim: usize,
    pub certificate: Option<Certificate>,
}

impl SolveOutcome {
    pub fn is_solvable(&self) -> bool {
        self.status == SolveStatus::Solvable
    }
}

fn quaternion_component(q: &Quaternion, comp: usize) -> Rational {
    match comp {
        0 => q.a.clone(),
        1 => q.b.clone(),
        2 => q.c.clone(),
        3 => q.d.clone(),
        _ => unreachable!(),
    }
}

fn basis_quaternion(comp: usize) -> Quaternion {
    match comp {
        0 => Quaternion::one(),
        1 => Quaternion::unit_i(),
        2 => Quaternion::unit_j(),
        3 => Quaternion::unit_k(),
        _ => unreachable!(),
    }
}

/// Real coordinates of a quaternion matrix: entry-major, then component.
pub fn matrix_coords(m: &QMatrix) -> Vec<Rational> {
    let mut out = Vec::with_capacity(4 * m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            for comp in 0..4 {
                out.push(quaternion_component(&m[(r, c)], comp));
            }
        }
    }
    out
}

/// Inverse of [`matrix_coords`].
pub fn matrix_from_coords(rows: usize, cols: usize, coords: &[Rational]) -> QMatrix {
    assert_eq!(coords.len(), 4 * rows * cols, "coordinate count mismatch");
    Mat::from_fn(rows, cols, |r, c| {
        let base = (r * cols + c) * 4;
        Quaternion::new(
            coords[base].clone(),
            coords[base + 1].clone(),
            coords[base + 2].clone(),
            coords[base + 3].clone(),
        )
    })
}

fn apply_linear_part(inst: &EquationInstance, x: &QMatrix, y: Option<&QMatrix>) -> QMatrix {
    match inst.kind {
        EquationKind::SylvesterHat => &(&inst.a * x) - &(&x.hat(inst.aut) * &inst.b),
        EquationKind::SteinHat => x - &(&(&inst.a * &x.hat(inst.aut)) * &inst.b),
        EquationKind::TwoSided => &(&inst.a * x) - &(y.expect("two unknowns") * &inst.b),
    }
}

/// Materializes the equation's left side as an exact real matrix acting on
/// the real coordinates of the unknown(s), plus the coordinates of `C`.
///
/// Columns follow the unknown's coordinate order; for the two-unknown kind
/// the `X` block comes first, then the `Y` block.
pub fn build_operator_matrix(inst: &EquationInstance) -> (RMatrix, Vec<Rational>) {
    let (m, n) = (inst.m(), inst.n());
    let rows = 4 * m * n;
    let cols = inst.kind.unknown_dim(m, n);
    let zero = QMatrix::zero(m, n);

    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(cols);
    let unknowns = if inst.kind == EquationKind::TwoSided { 2 } else { 1 };
    for unknown in 0..unknowns {
        for r in 0..m {
            for c in 0..n {
                for comp in 0..4 {
                    let mut basis = zero.clone();
                    basis[(r, c)] = basis_quaternion(comp);
                    let image = if inst.kind == EquationKind::TwoSided {
                        if unknown == 0 {
                            apply_linear_part(inst, &basis, Some(&zero))
                        } else {
                            apply_linear_part(inst, &zero, Some(&basis))
                        }
                    } else {
                        apply_linear_part(inst, &basis, None)
                    };
                    columns.push(matrix_coords(&image));
                }
            }
        }
    }

    let op = Mat::from_fn(rows, cols, |r, c| columns[c][r].clone());
    (op, matrix_coords(&inst.c))
}

/// Exact solve of the vectorized system.
pub fn solve_equation(inst: &EquationInstance) -> SolveOutcome {
    let (op, rhs) = build_operator_matrix(inst);
    let (m, n) = (inst.m(), inst.n());
    match linsolve::solve_linear_system(&op, &rhs) {
        LinearSolution::Solvable {
            particular,
            nullspace,
        } => {
            let solution = match inst.kind {
                EquationKind::TwoSided => Solution::Pair {
                    x: matrix_from_coords(m, n, &particular[..4 * m * n]),
                    y: matrix_from_coords(m, n, &particular[4 * m * n..]),
                },
                _ => Solution::Single(matrix_from_coords(m, n, &particular)),
            };
            debug_assert!(inst.residual(&solution).unwrap().is_zero());
            SolveOutcome {
                status: SolveStatus::Solvable,
                solution: Some(solution),
                solution_space_dim: nullspace.len(),
                certificate: None,
            }
        }
        LinearSolution::Infeasible { certificate } => SolveOutcome {
            status: SolveStatus::Unsolvable,
            solution: None,
            solution_space_dim: op.cols() - linsolve::rank(&op),
            certificate: Some(Certificate::Real(certificate)),
        },
    }
}

fn flatten_complex(m: &CMatrix) -> Vec<GaussianRational> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(m[(r, c)].clone());
        }
    }
    out
}

fn unflatten_complex(rows: usize, cols: usize, v: &[GaussianRational]) -> CMatrix {
    assert_eq!(v.len(), rows * cols);
    Mat::from_fn(rows, cols, |r, c| v[r * cols + c].clone())
}

/// Vectorizes a complex-linear map on m x n complex matrices.
fn complex_operator<F: Fn(&CMatrix) -> CMatrix>(f: F, m: usize, n: usize) -> CMatrix {
    let dim = m * n;
    let mut columns = Vec::with_capacity(dim);
    for idx in 0..dim {
        let mut basis = CMatrix::zero(m, n);
        basis[(idx / n, idx % n)] = GaussianRational::new(
            Rational::from_integer(1.into()),
            Rational::zero(),
        );
        columns.push(flatten_complex(&f(&basis)));
    }
    Mat::from_fn(dim, dim, |r, c| columns[c][r].clone())
}

/// Solves a complex-coefficient instance through the decoupled pair of
/// complex equations and recovers `X = Z1 + Z2·j`.
///
/// For `A·X - X̂·B = C` this is the pair `A·Z1 - Z1·B = C1` and
/// `A·Z2 - ε·Z2·B̄ = C2`; for `X - A·X̂·B = C` it is `Z1 - A·Z1·B = C1`
/// and `Z2 - ε·A·Z2·B̄ = C2`, where `C = C1 + C2·j`.
pub fn solve_structured(inst: &EquationInstance) -> Result<SolveOutcome, EquationError> {
    if inst.kind == EquationKind::TwoSided {
        return Err(EquationError::WrongKind {
            op: "solve_structured",
            found: inst.kind,
        });
    }
    for (field, mat) in [("A", &inst.a), ("B", &inst.b)] {
        if let Some((row, col)) = mat.first_noncomplex_entry() {
            return Err(EquationError::NonComplexEntry { field, row, col });
        }
    }
    let (m, n) = (inst.m(), inst.n());
    let a = inst.a.complex_parts().0;
    let b = inst.b.complex_parts().0;
    let b_conj = b.conj_entries();
    let eps = GaussianRational::new(inst.aut.sign(), Rational::zero());
    let (c1, c2) = inst.c.complex_parts();

    let stein = inst.kind == EquationKind::SteinHat;
    let first_map = |z: &CMatrix| -> CMatrix {
        if stein {
            z - &(&(&a * z) * &b)
        } else {
            &(&a * z) - &(z * &b)
        }
    };
    let second_map = |z: &CMatrix| -> CMatrix {
        if stein {
            z - &(&(&a * z) * &b_conj).scale_left(&eps)
        } else {
            &(&a * z) - &(z * &b_conj).scale_left(&eps)
        }
    };

    let op1 = complex_operator(first_map, m, n);
    let op2 = complex_operator(second_map, m, n);
    let sol1 = linsolve::solve_linear_system(&op1, &flatten_complex(&c1));
    let sol2 = linsolve::solve_linear_system(&op2, &flatten_complex(&c2));

    match (sol1, sol2) {
        (
            LinearSolution::Solvable {
                particular: p1,
                nullspace: n1,
            },
            LinearSolution::Solvable {
                particular: p2,
                nullspace: n2,
            },
        ) => {
            let z1 = unflatten_complex(m, n, &p1);
            let z2 = unflatten_complex(m, n, &p2);
            let x = join_complex_parts(&z1, &z2);
            let solution = Solution::Single(x);
            debug_assert!(inst.residual(&solution).unwrap().is_zero());
            Ok(SolveOutcome {
                status: SolveStatus::Solvable,
                solution: Some(solution),
                // each complex degree of freedom is two real ones
                solution_space_dim: 2 * (n1.len() + n2.len()),
                certificate: None,
            })
        }
        (first, second) => {
            let certificate = [&first, &second]
                .into_iter()
                .find_map(|s| match s {
                    LinearSolution::Infeasible { certificate } => {
                        Some(Certificate::Complex(certificate.clone()))
                    }
                    _ => None,
                });
            let dim = 2 * ((m * n - linsolve::rank(&op1)) + (m * n - linsolve::rank(&op2)));
            Ok(SolveOutcome {
                status: SolveStatus::Unsolvable,
                solution: None,
                solution_space_dim: dim,
                certificate,
            })
        }
    }
}

/// True when the vectorized operator is nonsingular, i.e. the equation has
/// exactly one solution for every right-hand side.
pub fn uniqueness_test(inst: &EquationInstance) -> Result<bool, EquationError> {
    if inst.kind == EquationKind::TwoSided {
        return Err(EquationError::WrongKind {
            op: "uniqueness_test",
            found: inst.kind,
        });
    }
    let (op, _) = build_operator_matrix(inst);
    Ok(linsolve::rank(&op) == op.cols())
}

/// Spectral uniqueness condition for the complex equations: disjoint
/// spectra for the Sylvester kind, no product `λμ = 1` for the Stein kind
/// (decided as a gcd with the reciprocal characteristic polynomial).
pub fn common_spectrum_test(
    a: &CMatrix,
    b: &CMatrix,
    kind: EquationKind,
) -> Result<bool, EquationError> {
    assert!(a.is_square() && b.is_square(), "spectra need square matrices");
    let pa = char_poly(a);
    let other = match kind {
        EquationKind::SylvesterHat => char_poly(b),
        EquationKind::SteinHat => char_poly(b).reciprocal(),
        EquationKind::TwoSided => {
            return Err(EquationError::WrongKind {
                op: "common_spectrum_test",
                found: kind,
            })
        }
    };
    Ok(pa.gcd(&other).is_constant())
}
