//! Smith normal form over the polynomial ring, with the two decision
//! procedures built on it: similarity of complex matrices (equal invariant
//! factors of `xI - A`) and strict equivalence of regular pencils (equal
//! invariant factors on both the `x`-side and the reversed side, which
//! together capture finite and infinite elementary divisors).

use std::fmt;

use num_traits::{One, Zero};

use crate::adjoint::CMatrix;
use crate::matrix::Mat;
use crate::poly::Poly;

/// Matrix over univariate polynomials.
pub type PolyMatrix = Mat<Poly>;

/// Invariant factors of a polynomial matrix: monic, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<Poly>,
    pub rank: usize,
}

impl SmithForm {
    pub fn factor_strings(&self) -> Vec<String> {
        self.invariant_factors.iter().map(Poly::to_string).collect()
    }
}

impl fmt::Display for SmithForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.factor_strings().join(", "))
    }
}

fn swap_cols(a: &mut [Vec<Poly>], c1: usize, c2: usize) {
    if c1 != c2 {
        for row in a.iter_mut() {
            row.swap(c1, c2);
        }
    }
}

/// Nonzero entry of minimal degree in the trailing submatrix, row-major
/// tie-breaking. Deterministic, which keeps reported forms reproducible.
fn find_pivot(a: &[Vec<Poly>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, e) in row.iter().enumerate().skip(k) {
            if let Some(d) = e.degree() {
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Rescales a row by a nonzero rational so its coefficients become
/// Gaussian integers with no common factor. Multiplying a row by a
/// nonzero constant is unimodular, so invariant factors are unaffected;
/// without this the coefficient bit-length grows exponentially during
/// elimination.
fn strip_row_content(row: &mut [Poly]) {
    use num_bigint::BigInt;
    use num_integer::Integer;

    let mut numer_gcd = BigInt::from(0);
    let mut denom_lcm = BigInt::from(1);
    for p in row.iter() {
        for z in p.coeffs() {
            for part in [&z.re, &z.im] {
                if !part.is_zero() {
                    numer_gcd = numer_gcd.gcd(part.numer());
                    denom_lcm = denom_lcm.lcm(part.denom());
                }
            }
        }
    }
    if numer_gcd.is_zero() {
        return;
    }
    let factor = crate::scalar::Rational::new(denom_lcm, numer_gcd);
    if factor.is_one() {
        return;
    }
    let scale = crate::scalar::gauss(factor, crate::scalar::Rational::zero());
    for p in row.iter_mut() {
        *p = p.scale(&scale);
    }
}

/// Smith normal form by unimodular row/column operations only.
///
/// Each round re-selects the minimal-degree pivot of the whole trailing
/// submatrix, reduces its row and column by one remainder sweep, and
/// strips row contents. A nonzero remainder strictly lowers the minimal
/// degree, so the rounds terminate; the standard row-absorption step then
/// enforces the divisibility chain.
pub fn smith_normal_form(m: &PolyMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Poly>> = (0..rows)
        .map(|r| (0..cols).map(|c| m[(r, c)].clone()).collect())
        .collect();
    let steps = rows.min(cols);
    let mut k = 0;
    'steps: while k < steps {
        loop {
            let Some((pi, pj)) = find_pivot(&a, k) else {
                break 'steps;
            };
            a.swap(k, pi);
            swap_cols(&mut a, k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = a[i][k].divmod(&a[k][k]);
                if !q.is_zero() {
                    for j in k..cols {
                        let delta = &q * &a[k][j];
                        a[i][j] = &a[i][j] - &delta;
                    }
                    strip_row_content(&mut a[i]);
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = a[k][j].divmod(&a[k][k]);
                if !q.is_zero() {
                    for i in k..rows {
                        let delta = &q * &a[i][k];
                        a[i][j] = &a[i][j] - &delta;
                    }
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                for row in a.iter_mut().skip(k) {
                    strip_row_content(row);
                }
                continue;
            }

            // row k and column k are clear beyond the pivot
            for row in a.iter_mut().skip(k + 1) {
                strip_row_content(row);
            }
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[k][k].divides(&a[i][j]));
            match offender {
                Some((i, _)) => {
                    for jj in k..cols {
                        a[k][jj] = &a[k][jj] + &a[i][jj];
                    }
                }
                None => break,
            }
        }
        if std::env::var("SMITH_DEBUG").is_ok() {
            let maxdeg = a.iter().flatten().filter_map(|p| p.degree()).max().unwrap_or(0);
            let maxbits = a
                .iter()
                .flatten()
                .flat_map(|p| p.coeffs().iter())
                .map(|z| z.re.numer().bits().max(z.im.numer().bits()).max(z.re.denom().bits()))
                .max()
                .unwrap_or(0);
            eprintln!("smith step {k}: max deg {maxdeg}, max bits {maxbits}");
        }
        k += 1;
    }

    let invariant_factors: Vec<Poly> = (0..k).map(|i| a[i][i].monic()).collect();
    debug_assert!(invariant_factors
        .windows(2)
        .all(|w| w[0].divides(&w[1])));
    SmithForm {
        invariant_factors,
        rank: k,
    }
}

/// The characteristic matrix `x·I - A`.
pub fn char_matrix(a: &CMatrix) -> PolyMatrix {
    assert!(a.is_square(), "characteristic matrix needs a square input");
    Mat::from_fn(a.rows(), a.cols(), |r, c| {
        let neg = Poly::constant(-a[(r, c)].clone());
        if r == c {
            neg + Poly::variable()
        } else {
            neg
        }
    })
}

/// Similarity test over the complex field: equal invariant factors of the
/// characteristic matrices. Panics if the inputs are not square of equal
/// size.
pub fn similar_over_c(a: &CMatrix, b: &CMatrix) -> bool {
    assert!(a.is_square() && b.is_square(), "similarity needs square matrices");
    assert_eq!(a.shape(), b.shape(), "similarity needs equal sizes");
    smith_normal_form(&char_matrix(a)) == smith_normal_form(&char_matrix(b))
}

/// The pencil `x·leading + trailing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub leading: CMatrix,
    pub trailing: CMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilError {
    /// `det(x·leading + trailing)` vanishes identically (or the pencil is
    /// not square), so the Weierstrass equivalence test does not apply.
    NotRegular { which: &'static str },
}

impl fmt::Display for PencilError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilError::NotRegular { which } => {
                write!(f, "the {which} pencil is not regular")
            }
        }
    }
}

impl std::error::Error for PencilError {}

impl Pencil {
    pub fn new(leading: CMatrix, trailing: CMatrix) -> Self {
        assert_eq!(leading.shape(), trailing.shape(), "pencil coefficient shapes differ");
        Pencil { leading, trailing }
    }

    /// `x·leading + trailing` as a polynomial matrix.
    pub fn lambda_matrix(&self) -> PolyMatrix {
        Mat::from_fn(self.leading.rows(), self.leading.cols(), |r, c| {
            Poly::from_coeffs(vec![self.trailing[(r, c)].clone(), self.leading[(r, c)].clone()])
        })
    }

    /// The reversed pencil `leading + x·trailing`, whose factors at `x = 0`
    /// carry the elementary divisors at infinity.
    pub fn reversed_matrix(&self) -> PolyMatrix {
        Mat::from_fn(self.leading.rows(), self.leading.cols(), |r, c| {
            Poly::from_coeffs(vec![self.leading[(r, c)].clone(), self.trailing[(r, c)].clone()])
        })
    }

    pub fn is_regular(&self) -> bool {
        self.leading.is_square()
            && smith_normal_form(&self.lambda_matrix()).rank == self.leading.rows()
    }
}

/// Invariant factors of a regular pencil on the `x`-side and the reversed
/// side; together a complete strict-equivalence invariant. `which` labels
/// the pencil in the non-regularity report.
pub fn pencil_invariants(
    p: &Pencil,
    which: &'static str,
) -> Result<(SmithForm, SmithForm), PencilError> {
    let lambda = smith_normal_form(&p.lambda_matrix());
    if !p.leading.is_square() || lambda.rank != p.leading.rows() {
        return Err(PencilError::NotRegular { which });
    }
    let reversed = smith_normal_form(&p.reversed_matrix());
    Ok((lambda, reversed))
}

/// Strict equivalence of regular pencils: invariant factors must agree on
/// the `x`-side and on the reversed side. Pencils of different shapes are
/// simply inequivalent; non-regular pencils are reported as a distinct
/// outcome.
pub fn strictly_equivalent_pencils(p: &Pencil, q: &Pencil) -> Result<bool, PencilError> {
    if p.leading.shape() != q.leading.shape() {
        return Ok(false);
    }
    let p_inv = pencil_invariants(p, "first")?;
    let q_inv = pencil_invariants(q, "second")?;
    Ok(p_inv == q_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::linsolve;
    use crate::poly::char_poly;
    use crate::scalar::{gauss_int, GaussianRational};

    fn cm(rows: Vec<Vec<(i64, i64)>>) -> CMatrix {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(re, im)| gauss_int(re, im)).collect())
                .collect(),
        )
    }

    fn poly(coeffs: Vec<i64>) -> Poly {
        Poly::from_coeffs(coeffs.into_iter().map(|c| gauss_int(c, 0)).collect())
    }

    #[test]
    fn smith_of_nilpotent_jordan_block() {
        let a = cm(vec![vec![(0, 0), (1, 0)], vec![(0, 0), (0, 0)]]);
        let s = smith_normal_form(&char_matrix(&a));
        assert_eq!(s.rank, 2);
        assert_eq!(s.invariant_factors, vec![Poly::one(), poly(vec![0, 0, 1])]);
    }

    #[test]
    fn smith_of_zero_matrix() {
        let a = cm(vec![vec![(0, 0), (0, 0)], vec![(0, 0), (0, 0)]]);
        let s = smith_normal_form(&char_matrix(&a));
        assert_eq!(
            s.invariant_factors,
            vec![poly(vec![0, 1]), poly(vec![0, 1])]
        );
    }

    #[test]
    fn smith_of_distinct_diagonal() {
        let a = cm(vec![vec![(1, 0), (0, 0)], vec![(0, 0), (2, 0)]]);
        let s = smith_normal_form(&char_matrix(&a));
        // distinct eigenvalues: (1, (x-1)(x-2))
        assert_eq!(
            s.invariant_factors,
            vec![Poly::one(), poly(vec![2, -3, 1])]
        );
        // product of invariant factors = characteristic polynomial
        let prod = s
            .invariant_factors
            .iter()
            .fold(Poly::one(), |acc, f| acc * f.clone());
        assert_eq!(prod, char_poly(&a));
    }

    #[test]
    fn smith_handles_rank_deficiency_and_empty() {
        let m: PolyMatrix = Mat::zero(2, 3);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, 0);
        assert!(s.invariant_factors.is_empty());
        let empty: PolyMatrix = Mat::zero(0, 0);
        assert_eq!(smith_normal_form(&empty).rank, 0);
    }

    #[test]
    fn smith_invariant_under_elementary_operations() {
        let base = char_matrix(&cm(vec![
            vec![(1, 1), (2, 0), (0, 0)],
            vec![(0, 0), (1, 0), (3, -1)],
            vec![(1, 0), (0, 2), (0, 0)],
        ]));
        let s0 = smith_normal_form(&base);

        // row swap, row addition with a polynomial multiple, column scaling
        // by a unit: all unimodular.
        let mut rows: Vec<Vec<Poly>> = (0..3)
            .map(|r| (0..3).map(|c| base[(r, c)].clone()).collect())
            .collect();
        rows.swap(0, 2);
        for j in 0..3 {
            let delta = &Poly::variable() * &rows[1][j].clone();
            rows[0][j] = &rows[0][j] + &delta;
        }
        for row in rows.iter_mut() {
            row[2] = row[2].scale(&gauss_int(0, 1)); // multiply a column by i
        }
        let tweaked = Mat::from_rows(rows);
        assert_eq!(smith_normal_form(&tweaked), s0);
    }

    #[test]
    fn similarity_conjugation_invariance() {
        let a = cm(vec![vec![(1, 0), (1, 1)], vec![(0, 0), (2, 0)]]);
        let t = cm(vec![vec![(1, 0), (2, 0)], vec![(1, 0), (3, 0)]]);
        let t_inv = linsolve::invert(&t).unwrap();
        let conj = &(&t * &a) * &t_inv;
        assert!(similar_over_c(&a, &conj));
        assert!(similar_over_c(&a, &a));
        // nilpotent vs zero: not similar
        let nil = cm(vec![vec![(0, 0), (1, 0)], vec![(0, 0), (0, 0)]]);
        let zero = cm(vec![vec![(0, 0), (0, 0)], vec![(0, 0), (0, 0)]]);
        assert!(!similar_over_c(&nil, &zero));
    }

    #[test]
    fn pencil_reflexivity_and_distinct_divisors() {
        let id: CMatrix = Mat::identity(2);
        let zero: CMatrix = Mat::zero(2, 2);
        let p = Pencil::new(id.clone(), zero.clone());
        let q = Pencil::new(id.clone(), id.clone());
        assert!(strictly_equivalent_pencils(&p, &p).unwrap());
        // finite divisors x^n vs (x+1)^n
        assert!(!strictly_equivalent_pencils(&p, &q).unwrap());
    }

    #[test]
    fn pencil_invariance_under_constant_equivalence() {
        let l = cm(vec![vec![(1, 0), (0, 1)], vec![(0, 0), (2, 0)]]);
        let m = cm(vec![vec![(0, 0), (1, 0)], vec![(1, 0), (1, 1)]]);
        let p = Pencil::new(l.clone(), m.clone());
        assert!(p.is_regular());
        let s = cm(vec![vec![(1, 0), (1, 0)], vec![(0, 0), (1, 0)]]);
        let r = cm(vec![vec![(2, 0), (0, 0)], vec![(3, 0), (1, 0)]]);
        let q = Pencil::new(&(&s * &l) * &r, &(&s * &m) * &r);
        assert!(strictly_equivalent_pencils(&p, &q).unwrap());
        assert!(strictly_equivalent_pencils(&q, &p).unwrap());
    }

    #[test]
    fn pencil_detects_infinite_divisors() {
        // x·[[1,0],[0,0]] + I vs x·I + I: same finite divisors on the
        // x-side is impossible here, but the reversed side alone separates
        // [[1,0],[0,0]] + x·I from I + x·I as well.
        let sing = cm(vec![vec![(1, 0), (0, 0)], vec![(0, 0), (0, 0)]]);
        let id: CMatrix = Mat::identity(2);
        let p = Pencil::new(sing, id.clone());
        let q = Pencil::new(id.clone(), id.clone());
        assert!(p.is_regular());
        assert!(!strictly_equivalent_pencils(&p, &q).unwrap());
    }

    #[test]
    fn non_regular_pencil_is_reported() {
        let zero: CMatrix = Mat::zero(1, 1);
        let p = Pencil::new(zero.clone(), zero.clone());
        let q = Pencil::new(Mat::identity(1), zero.clone());
        assert_eq!(
            strictly_equivalent_pencils(&p, &q),
            Err(PencilError::NotRegular { which: "first" })
        );
        assert!(!p.is_regular());
    }

    #[test]
    fn smith_is_deterministic() {
        let m = char_matrix(&cm(vec![
            vec![(0, 1), (1, 0), (2, 0)],
            vec![(1, 0), (0, 0), (0, 1)],
            vec![(0, 0), (3, 0), (1, 1)],
        ]));
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m);
        assert_eq!(a, b);
        let prod = a
            .invariant_factors
            .iter()
            .fold(Poly::one(), |acc, f| acc * f.clone());
        assert!(prod.is_monic());
    }

    #[test]
    fn different_shapes_are_inequivalent() {
        let p = Pencil::new(Mat::identity(1), Mat::zero(1, 1));
        let q = Pencil::new(Mat::identity(2), Mat::zero(2, 2));
        assert_eq!(strictly_equivalent_pencils(&p, &q), Ok(false));
    }

    #[test]
    fn smith_ignores_gaussian_units() {
        // multiplying the whole matrix by i is unimodular
        let m = char_matrix(&cm(vec![vec![(2, 0), (1, 0)], vec![(0, 0), (2, 0)]]));
        let unit: GaussianRational = gauss_int(0, 1);
        let scaled = m.map(|p| p.scale(&unit));
        assert_eq!(smith_normal_form(&m), smith_normal_form(&scaled));
    }
}
