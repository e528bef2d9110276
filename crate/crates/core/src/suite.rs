//! Batch cross-validation: for seeded instance streams, the standalone
//! criterion verdict must equal the solver's verdict on every instance,
//! every returned solution must have exactly zero residual, and every
//! constructed witness must verify.
//!
//! Instance plans mix constructed-solvable right-hand sides with arbitrary
//! ones, plus a degenerate flavor (identity or zero coefficients) whose
//! random right-hand sides are almost surely unsolvable, so both verdict
//! values are exercised.

use std::fmt;

use serde_json::json;

use crate::criteria::run_criterion;
use crate::equation::{solve_equation, EquationKind};
use crate::gen::{generate_instance, GenMode, GenSpec, SplitMix64};
use crate::matrix::Mat;
use crate::scalar::{Automorphism, Quaternion};
use crate::witness::{build_witness, verify_witness};

/// Per-instance seed for index `i` of a stream: steps the SplitMix64 Weyl
/// state `i + 1` increments past the base seed.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    base.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)))
}

#[derive(Clone, Debug)]
pub struct BiconditionalReport {
    pub kind: EquationKind,
    pub total: usize,
    pub agreements: usize,
    pub mismatch_seeds: Vec<u64>,
    pub solvable_count: usize,
    pub criterion_true_count: usize,
    pub residual_failures: usize,
    pub witness_failures: usize,
}

impl BiconditionalReport {
    pub fn is_clean(&self) -> bool {
        self.agreements == self.total
            && self.residual_failures == 0
            && self.witness_failures == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.kind.as_str(),
            "total": self.total,
            "agreements": self.agreements,
            "mismatch_seeds": self.mismatch_seeds,
            "solvable": self.solvable_count,
            "criterion_true": self.criterion_true_count,
            "residual_failures": self.residual_failures,
            "witness_failures": self.witness_failures,
        })
    }
}

impl fmt::Display for BiconditionalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} agree ({} solvable, {} criterion-true, {} residual failures, {} witness failures)",
            self.kind,
            self.agreements,
            self.total,
            self.solvable_count,
            self.criterion_true_count,
            self.residual_failures,
            self.witness_failures
        )
    }
}

/// Runs `count` seeded instances of one kind and cross-checks the
/// criterion against the solver, residuals, and witnesses.
pub fn biconditional_suite(
    kind: EquationKind,
    count: usize,
    max_dim: usize,
    base_seed: u64,
) -> BiconditionalReport {
    assert!(max_dim >= 1, "max_dim must be at least 1");
    let mut report = BiconditionalReport {
        kind,
        total: count,
        agreements: 0,
        mismatch_seeds: Vec::new(),
        solvable_count: 0,
        criterion_true_count: 0,
        residual_failures: 0,
        witness_failures: 0,
    };

    for idx in 0..count {
        let seed = instance_seed(base_seed, idx as u64);
        let mut plan = SplitMix64::new(seed);
        let m = 1 + plan.below(max_dim as u64) as usize;
        let mut n = 1 + plan.below(max_dim as u64) as usize;
        let aut = if plan.below(2) == 0 {
            Automorphism::IDENTITY
        } else {
            Automorphism::NEGATE_JK
        };
        let flavor = idx % 4;
        let mode = if flavor == 1 || flavor == 3 {
            GenMode::Arbitrary
        } else {
            GenMode::Solvable
        };
        if flavor == 3 {
            n = m;
        }

        let mut spec = GenSpec::new(kind, m, n, aut, plan.next_u64());
        spec.mode = mode;
        let mut file = generate_instance(&spec).expect("suite dimensions are in range");
        if flavor == 3 {
            // degenerate coefficients: identity blocks (zero for the
            // two-unknown kind) make a random right side almost surely
            // unsolvable, covering the negative verdict.
            let blocks = match kind {
                EquationKind::TwoSided => Mat::zero(m, m),
                _ => Mat::<Quaternion>::identity(m),
            };
            let c = file.instance.c().clone();
            file.instance =
                crate::equation::EquationInstance::new(kind, blocks.clone(), blocks, c, aut)
                    .expect("degenerate instance dimensions are consistent");
            file.known_solution = None;
        }
        let inst = &file.instance;

        let outcome = solve_equation(inst);
        let criterion = run_criterion(inst).expect("kind dispatch always matches");

        if outcome.is_solvable() {
            report.solvable_count += 1;
        }
        if criterion.verdict {
            report.criterion_true_count += 1;
        }
        if criterion.verdict == outcome.is_solvable() {
            report.agreements += 1;
        } else {
            report.mismatch_seeds.push(seed);
        }

        if let Some(sol) = &outcome.solution {
            if !inst.residual(sol).expect("solver matches kind").is_zero() {
                report.residual_failures += 1;
            }
            match build_witness(inst, sol).and_then(|w| verify_witness(inst, &w)) {
                Ok(true) => {}
                _ => report.witness_failures += 1,
            }
        }
    }

    report
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub reports: Vec<BiconditionalReport>,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.reports.iter().all(BiconditionalReport::is_clean)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "clean": self.is_clean(),
            "kinds": self.reports.iter().map(BiconditionalReport::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        write!(
            f,
            "overall: {}",
            if self.is_clean() { "PASS" } else { "FAIL" }
        )
    }
}

/// The full biconditional battery over several kinds.
pub fn validation_suite(
    kinds: &[EquationKind],
    count: usize,
    max_dim: usize,
    base_seed: u64,
) -> SuiteReport {
    SuiteReport {
        reports: kinds
            .iter()
            .map(|&kind| biconditional_suite(kind, count, max_dim, base_seed))
            .collect(),
    }
}
