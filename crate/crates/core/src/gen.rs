//! Seeded instance generation.
//!
//! Randomness comes from SplitMix64 (Steele, Lea & Flood's split-mix
//! generator: a 64-bit Weyl sequence with two xor-shift-multiply finalizer
//! rounds), chosen because it is trivial to reimplement bit-for-bit in any
//! language. Bounded draws use plain modulo reduction; the tiny bias is
//! irrelevant here, reproducibility is what matters. Everything a
//! generated file contains is a pure function of the generation spec.

use std::fmt;

use crate::adjoint::QMatrix;
use crate::equation::{EquationInstance, EquationKind, Solution};
use crate::io::InstanceFile;
use crate::matrix::Mat;
use crate::scalar::{rat_int, Automorphism, Quaternion, Rational};

/// SplitMix64 PRNG.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound` by modulo reduction; `bound > 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }

    /// Signed draw in `-mag..=mag`.
    pub fn signed(&mut self, mag: u64) -> i64 {
        self.below(2 * mag + 1) as i64 - mag as i64
    }
}

/// Which subfield the coefficient entries are drawn from. The right-hand
/// side `C` is always fully quaternionic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Real,
    Complex,
    Quaternion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// `C` is built from a random solution, recorded in the file.
    Solvable,
    /// `C` is drawn independently.
    Arbitrary,
}

impl GenMode {
    pub fn as_str(self) -> &'static str {
        match self {
            GenMode::Solvable => "solvable",
            GenMode::Arbitrary => "arbitrary",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "solvable" => Some(GenMode::Solvable),
            "arbitrary" => Some(GenMode::Arbitrary),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenSpec {
    pub kind: EquationKind,
    pub m: usize,
    pub n: usize,
    pub aut: Automorphism,
    pub seed: u64,
    pub mode: GenMode,
    /// Numerators and denominators are bounded by this magnitude.
    pub max_magnitude: u64,
    pub entries: EntryKind,
}

impl GenSpec {
    pub fn new(kind: EquationKind, m: usize, n: usize, aut: Automorphism, seed: u64) -> Self {
        GenSpec {
            kind,
            m,
            n,
            aut,
            seed,
            mode: GenMode::Solvable,
            max_magnitude: 9,
            entries: EntryKind::Quaternion,
        }
    }
}

pub const MAX_DIMENSION: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    DimensionOutOfRange { field: &'static str, value: usize },
    ZeroMagnitude,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::DimensionOutOfRange { field, value } => write!(
                f,
                "{field} = {value} is outside the supported range 1..={MAX_DIMENSION}"
            ),
            GenError::ZeroMagnitude => write!(f, "max magnitude must be at least 1"),
        }
    }
}

impl std::error::Error for GenError {}

pub fn random_rational(rng: &mut SplitMix64, mag: u64) -> Rational {
    let numer = rng.signed(mag);
    let denom = rng.below(mag) + 1;
    Rational::new(numer.into(), (denom as i64).into())
}

pub fn random_quaternion(rng: &mut SplitMix64, mag: u64, entries: EntryKind) -> Quaternion {
    let a = random_rational(rng, mag);
    let b = match entries {
        EntryKind::Real => rat_int(0),
        _ => random_rational(rng, mag),
    };
    let (c, d) = match entries {
        EntryKind::Quaternion => (random_rational(rng, mag), random_rational(rng, mag)),
        _ => (rat_int(0), rat_int(0)),
    };
    Quaternion::new(a, b, c, d)
}

pub fn random_matrix(
    rng: &mut SplitMix64,
    rows: usize,
    cols: usize,
    mag: u64,
    entries: EntryKind,
) -> QMatrix {
    Mat::from_fn(rows, cols, |_, _| random_quaternion(rng, mag, entries))
}

/// Draws matrices until one is nonsingular over the skew field. Random
/// square matrices are almost never singular, so this terminates fast.
pub fn random_nonsingular(
    rng: &mut SplitMix64,
    n: usize,
    mag: u64,
    entries: EntryKind,
) -> QMatrix {
    loop {
        let m = random_matrix(rng, n, n, mag, entries);
        if m.is_nonsingular_h() {
            return m;
        }
    }
}

/// Deterministically generates an instance file from the spec.
pub fn generate_instance(spec: &GenSpec) -> Result<InstanceFile, GenError> {
    for (field, value) in [("m", spec.m), ("n", spec.n)] {
        if value == 0 || value > MAX_DIMENSION {
            return Err(GenError::DimensionOutOfRange { field, value });
        }
    }
    if spec.max_magnitude == 0 {
        return Err(GenError::ZeroMagnitude);
    }

    let mut rng = SplitMix64::new(spec.seed);
    let mag = spec.max_magnitude;
    let a = random_matrix(&mut rng, spec.m, spec.m, mag, spec.entries);
    let b = random_matrix(&mut rng, spec.n, spec.n, mag, spec.entries);

    let (c, known_solution) = match spec.mode {
        GenMode::Arbitrary => (
            random_matrix(&mut rng, spec.m, spec.n, mag, EntryKind::Quaternion),
            None,
        ),
        GenMode::Solvable => {
            let x0 = random_matrix(&mut rng, spec.m, spec.n, mag, EntryKind::Quaternion);
            match spec.kind {
                EquationKind::SylvesterHat => {
                    let c = &(&a * &x0) - &(&x0.hat(spec.aut) * &b);
                    (c, Some(Solution::Single(x0)))
                }
                EquationKind::SteinHat => {
                    let c = &x0 - &(&(&a * &x0.hat(spec.aut)) * &b);
                    (c, Some(Solution::Single(x0)))
                }
                EquationKind::TwoSided => {
                    let y0 = random_matrix(&mut rng, spec.m, spec.n, mag, EntryKind::Quaternion);
                    let c = &(&a * &x0) - &(&y0 * &b);
                    (c, Some(Solution::Pair { x: x0, y: y0 }))
                }
            }
        }
    };

    let instance = EquationInstance::new(spec.kind, a, b, c, spec.aut)
        .expect("generated dimensions are consistent");
    Ok(InstanceFile::new(instance, known_solution))
}
