//! Exact solvers and solvability criteria for quaternion matrix equations
//! with an involutive automorphism `q ↦ q̂`.
//!
//! The crate handles three equations over the skew field of quaternions:
//!
//! * `A·X - X̂·B = C` (twisted Sylvester),
//! * `X - A·X̂·B = C` (twisted Stein),
//! * `A·X - Y·B = C` (two unknowns, no hat),
//!
//! where the automorphism is `a + b·i + c·j + d·k ↦ a + b·i + ε(c·j + d·k)`
//! for a sign `ε`. Every computation runs over arbitrary-precision
//! rationals, so solvability verdicts, residuals, witnesses and invariant
//! factors are exact — equalities, not tolerances.
//!
//! Each equation has two independent decision routes that the test suite
//! plays against each other: an exact vectorized linear solve, and a
//! standalone block-matrix criterion (similarity of twisted complex
//! adjoints, strict pencil equivalence, or rank equality over the skew
//! field, decided through polynomial Smith normal forms).

pub mod adjoint;
pub mod criteria;
pub mod equation;
pub mod gen;
pub mod io;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod smith;
pub mod suite;
pub mod witness;

pub use adjoint::{join_complex_parts, CMatrix, JTwist, QMatrix, RMatrix};
pub use criteria::{
    check_rank_equivalence, check_roth_hat, check_wimmer_hat, run_criterion, ComparedInvariants,
    CriterionMethod, CriterionReport,
};
pub use equation::{
    build_operator_matrix, common_spectrum_test, solve_equation, solve_structured,
    uniqueness_test, Certificate, EquationError, EquationInstance, EquationKind, Solution,
    SolveOutcome, SolveStatus,
};
pub use gen::{generate_instance, EntryKind, GenMode, GenSpec, SplitMix64};
pub use io::{FormatError, InstanceFile};
pub use linsolve::{solve_linear_system, LinearSolution};
pub use matrix::{block_diag, block_upper_triangular, from_blocks, Mat};
pub use poly::{char_poly, Poly};
pub use scalar::{Automorphism, GaussianRational, Quaternion, Rational};
pub use smith::{
    char_matrix, pencil_invariants, similar_over_c, smith_normal_form,
    strictly_equivalent_pencils, Pencil, PencilError, PolyMatrix, SmithForm,
};
pub use suite::{biconditional_suite, validation_suite, BiconditionalReport, SuiteReport};
pub use witness::{
    build_witness, change_of_variables, pull_back_solution, pull_back_witness, verify_witness,
    Witness,
};
