//! Matrix-level quaternion structure: the complex adjoint and its twisted
//! variant, the real representation, entrywise automorphism, and rank and
//! inversion over the skew field.
//!
//! For `M = U + V·j` with complex `U, V`, the complex adjoint is the
//! `2m x 2n` matrix `[[U, V], [-V̄, Ū]]`. It is an exact ring homomorphism,
//! which lets one decide every rank/inversion question over the quaternions
//! with a single commutative elimination routine.

use num_traits::{One, Zero};

use crate::linsolve;
use crate::matrix::{from_blocks, Mat};
use crate::scalar::{Automorphism, GaussianRational, Quaternion, Rational};

/// Dense quaternion matrix.
pub type QMatrix = Mat<Quaternion>;

/// Dense matrix over the Gaussian rationals.
pub type CMatrix = Mat<GaussianRational>;

/// Dense matrix over the rationals.
pub type RMatrix = Mat<Rational>;

impl Mat<Quaternion> {
    /// Entrywise automorphism; an involution, multiplicative on products.
    pub fn hat(&self, aut: Automorphism) -> QMatrix {
        if aut.is_identity() {
            self.clone()
        } else {
            self.map(|q| q.hat(aut))
        }
    }

    /// The unique complex pair `(U, V)` with `self = U + V·j`.
    pub fn complex_parts(&self) -> (CMatrix, CMatrix) {
        (
            self.map(|q| q.complex_parts().0),
            self.map(|q| q.complex_parts().1),
        )
    }

    /// The `2m x 2n` complex adjoint `[[U, V], [-V̄, Ū]]`.
    pub fn complex_adjoint(&self) -> CMatrix {
        let (u, v) = self.complex_parts();
        let neg_v_conj = -&v.conj_entries();
        let u_conj = u.conj_entries();
        from_blocks(&[&[&u, &v], &[&neg_v_conj, &u_conj]])
    }

    /// `J · complex_adjoint(self)` with `J = diag(I, εI)`.
    ///
    /// Equals the plain adjoint for the identity automorphism. Requires a
    /// square matrix so that `J` acts on both sides consistently.
    pub fn twisted_adjoint(&self, aut: Automorphism) -> CMatrix {
        assert!(self.is_square(), "twisted adjoint needs a square matrix");
        let adj = self.complex_adjoint();
        if aut.is_identity() {
            adj
        } else {
            let j = JTwist::new(aut, self.rows()).matrix();
            &j * &adj
        }
    }

    /// The `4n x 4n` real representation of a square quaternion matrix
    /// `A = A1 + A2·i + A3·j + A4·k`:
    ///
    /// ```text
    /// [ A1  A2 -A3  A4]
    /// [ A2 -A1 -A4 -A3]
    /// [ A3 -A4  A1  A2]
    /// [ A4  A3  A2 -A1]
    /// ```
    pub fn real_rep(&self) -> RMatrix {
        assert!(self.is_square(), "real representation needs a square matrix");
        let a1 = self.map(|q| q.a.clone());
        let a2 = self.map(|q| q.b.clone());
        let a3 = self.map(|q| q.c.clone());
        let a4 = self.map(|q| q.d.clone());
        let (n1, n3, n4) = (-&a1, -&a3, -&a4);
        from_blocks(&[
            &[&a1, &a2, &n3, &a4],
            &[&a2, &n1, &n4, &n3],
            &[&a3, &n4, &a1, &a2],
            &[&a4, &a3, &a2, &n1],
        ])
    }

    /// Rank over the skew field, computed as half the adjoint rank.
    pub fn rank_h(&self) -> usize {
        let r = linsolve::rank(&self.complex_adjoint());
        assert!(r % 2 == 0, "complex adjoint rank must be even");
        r / 2
    }

    pub fn is_nonsingular_h(&self) -> bool {
        self.is_square() && self.rank_h() == self.rows()
    }

    /// Exact inverse over the skew field, `None` when singular.
    ///
    /// Inverts the complex adjoint and reads the inverse back off its
    /// top block row; the adjoint of the inverse is the inverse of the
    /// adjoint because the adjoint is a homomorphism.
    pub fn inverse_h(&self) -> Option<QMatrix> {
        assert!(self.is_square(), "only square matrices can be inverted");
        let n = self.rows();
        let adj_inv = linsolve::invert(&self.complex_adjoint())?;
        let u = adj_inv.submatrix(0, n, 0, n);
        let v = adj_inv.submatrix(0, n, n, 2 * n);
        let inv = join_complex_parts(&u, &v);
        debug_assert_eq!(&(&inv * self), &Mat::identity(n));
        Some(inv)
    }

    /// True when every entry lies in the complex subfield (`c = d = 0`).
    pub fn has_complex_entries(&self) -> bool {
        self.first_noncomplex_entry().is_none()
    }

    pub fn first_noncomplex_entry(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if !self[(r, c)].is_complex() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn has_real_entries(&self) -> bool {
        (0..self.rows()).all(|r| (0..self.cols()).all(|c| self[(r, c)].is_real()))
    }
}

impl Mat<GaussianRational> {
    /// Entrywise complex conjugate.
    pub fn conj_entries(&self) -> CMatrix {
        self.map(|z| z.conj())
    }

    /// Embeds into the quaternions with zero `j`-part.
    pub fn into_quaternion(&self) -> QMatrix {
        self.map(Quaternion::from_complex)
    }
}

/// Reassembles `U + V·j` from a complex pair of equal shape.
pub fn join_complex_parts(u: &CMatrix, v: &CMatrix) -> QMatrix {
    assert_eq!(u.shape(), v.shape(), "complex parts must share a shape");
    Mat::from_fn(u.rows(), u.cols(), |r, c| {
        Quaternion::from_complex_pair(&u[(r, c)], &v[(r, c)])
    })
}

/// Embeds a rational matrix into the quaternions.
pub fn rational_into_quaternion(m: &RMatrix) -> QMatrix {
    m.map(|r| Quaternion::new(r.clone(), Rational::zero(), Rational::zero(), Rational::zero()))
}

/// The block sign matrix `J = diag(I, εI)` that conjugates the adjoint of
/// a hatted matrix: `complex_adjoint(M̂) = J · complex_adjoint(M) · J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JTwist {
    pub aut: Automorphism,
    pub block: usize,
}

impl JTwist {
    pub fn new(aut: Automorphism, block: usize) -> Self {
        JTwist { aut, block }
    }

    /// The `2·block` square matrix `diag(I, εI)`. Its own inverse.
    pub fn matrix(&self) -> CMatrix {
        let n = self.block;
        let eps = GaussianRational::new(self.aut.sign(), Rational::zero());
        Mat::from_fn(2 * n, 2 * n, |r, c| {
            if r != c {
                GaussianRational::zero()
            } else if r < n {
                GaussianRational::one()
            } else {
                eps.clone()
            }
        })
    }
}
