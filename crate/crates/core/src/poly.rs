//! Univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored lowest degree first with a nonzero leading
//! coefficient (the zero polynomial is the empty list). Division, gcd and
//! the characteristic polynomial are exact; these back the Smith-form
//! similarity and pencil-equivalence decisions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::adjoint::CMatrix;
use crate::matrix::Mat;
use crate::scalar::{rat_int, GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn variable() -> Self {
        Poly::from_coeffs(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    /// `c · x^deg`.
    pub fn monomial(c: GaussianRational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = GaussianRational::one() / lead.clone();
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect(),
                }
            }
        }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        let d_deg = d.degree().expect("division by the zero polynomial");
        let d_lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - d_deg];
        while rem.len() >= d.coeffs.len() {
            let shift = rem.len() - d.coeffs.len();
            let factor = rem.last().unwrap().clone() / d_lead.clone();
            quot[shift] = factor.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let delta = factor.clone() * dc.clone();
                rem[shift + i] = rem[shift + i].clone() - delta;
            }
            // leading term cancels exactly
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly { coeffs: rem })
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divmod(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Coefficient reversal `x^deg · p(1/x)`; drops roots at zero.
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &GaussianRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, o: Poly) -> Poly {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self.coeffs, o.coeffs)
        } else {
            (o.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly::from_coeffs(long)
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, o: Poly) -> Poly {
        self + (-o)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, o: Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let delta = a.clone() * b.clone();
                out[i + j] = out[i + j].clone() + delta;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<'b> Add<&'b Poly> for &Poly {
    type Output = Poly;

    fn add(self, o: &'b Poly) -> Poly {
        self.clone() + o.clone()
    }
}

impl<'b> Sub<&'b Poly> for &Poly {
    type Output = Poly;

    fn sub(self, o: &'b Poly) -> Poly {
        self.clone() - o.clone()
    }
}

impl<'b> Mul<&'b Poly> for &Poly {
    type Output = Poly;

    fn mul(self, o: &'b Poly) -> Poly {
        self.clone() * o.clone()
    }
}

/// Sign-extracted printable coefficient; an empty body means a bare unit
/// that should vanish before a variable power.
fn coeff_body(c: &GaussianRational, before_power: bool) -> (bool, String) {
    use num_traits::Signed;
    if c.im.is_zero() {
        let mag = c.re.abs();
        let body = if before_power && mag.is_one() {
            String::new()
        } else {
            mag.to_string()
        };
        (c.re.is_negative(), body)
    } else if c.re.is_zero() {
        let mag = c.im.abs();
        let body = if mag.is_one() {
            "i".to_owned()
        } else {
            format!("{mag}i")
        };
        (c.im.is_negative(), body)
    } else {
        let (op, mag) = if c.im.is_negative() {
            ("-", c.im.abs())
        } else {
            ("+", c.im.abs())
        };
        let im = if mag.is_one() {
            "i".to_owned()
        } else {
            format!("{mag}i")
        };
        (false, format!("({} {op} {im})", c.re))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = coeff_body(c, deg > 0);
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
            match deg {
                0 => Ok(()),
                1 => write!(f, "x"),
                _ => write!(f, "x^{deg}"),
            }?;
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x·I - A)` by the Faddeev-LeVerrier
/// recurrence; exact, and independent of the Smith-form machinery so the
/// two can cross-check each other.
pub fn char_poly(a: &CMatrix) -> Poly {
    assert!(a.is_square(), "characteristic polynomial needs a square matrix");
    let n = a.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut aux: CMatrix = Mat::identity(n);
    for k in 1..=n {
        let prod = a * &aux;
        let mut trace = GaussianRational::zero();
        for i in 0..n {
            trace = trace + prod[(i, i)].clone();
        }
        let c = -(trace / GaussianRational::new(rat_int(k as i64), Rational::zero()));
        coeffs[n - k] = c.clone();
        aux = &prod + &Mat::scalar(n, &c);
    }
    Poly::from_coeffs(coeffs)
}
