//! Exact Gauss-Jordan elimination over a field.
//!
//! Generic over the entry type so the same routine serves rational systems
//! (vectorized quaternion equations) and Gaussian-rational systems
//! (the decoupled complex equations). Infeasibility is a value, not an
//! error: the solver returns a left row vector `y` with `y·A = 0` and
//! `y·b ≠ 0`, exhibiting `rank(A) < rank([A|b])`.

use std::ops::Div;

use crate::matrix::{Mat, Ring};

/// Field bound: ring with exact division by nonzero elements.
pub trait FieldEntry: Ring + Div<Output = Self> {}

impl<T> FieldEntry for T where T: Ring + Div<Output = Self> {}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution<F> {
    /// One particular solution plus a basis of the homogeneous solutions.
    Solvable {
        particular: Vec<F>,
        nullspace: Vec<Vec<F>>,
    },
    /// Certificate row `y` with `y·A = 0` and `y·b ≠ 0`.
    Infeasible { certificate: Vec<F> },
}

impl<F> LinearSolution<F> {
    pub fn is_solvable(&self) -> bool {
        matches!(self, LinearSolution::Solvable { .. })
    }
}

struct Elimination<F> {
    work: Vec<Vec<F>>,
    rhs: Vec<F>,
    /// Row-operation history: `trans · original = work`.
    trans: Vec<Vec<F>>,
    pivot_cols: Vec<usize>,
}

fn eliminate<F: FieldEntry>(a: &Mat<F>, b: &[F]) -> Elimination<F> {
    let (m, n) = a.shape();
    assert_eq!(b.len(), m, "rhs length must match row count");
    let mut work: Vec<Vec<F>> = (0..m)
        .map(|r| (0..n).map(|c| a[(r, c)].clone()).collect())
        .collect();
    let mut rhs = b.to_vec();
    let mut trans: Vec<Vec<F>> = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| if r == c { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();

    let mut rank = 0;
    for col in 0..n {
        let Some(pivot_row) = (rank..m).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot_row);
        trans.swap(rank, pivot_row);
        rhs.swap(rank, pivot_row);

        let pivot = work[rank][col].clone();
        for e in work[rank].iter_mut() {
            *e = e.clone() / pivot.clone();
        }
        for e in trans[rank].iter_mut() {
            *e = e.clone() / pivot.clone();
        }
        rhs[rank] = rhs[rank].clone() / pivot.clone();

        for r in 0..m {
            if r == rank || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in 0..n {
                let delta = factor.clone() * work[rank][c].clone();
                work[r][c] = work[r][c].clone() - delta;
            }
            for c in 0..m {
                let delta = factor.clone() * trans[rank][c].clone();
                trans[r][c] = trans[r][c].clone() - delta;
            }
            let delta = factor * rhs[rank].clone();
            rhs[r] = rhs[r].clone() - delta;
        }

        pivot_cols.push(col);
        rank += 1;
        if rank == m {
            break;
        }
    }

    Elimination {
        work,
        rhs,
        trans,
        pivot_cols,
    }
}

/// Solves `A x = b` exactly.
pub fn solve_linear_system<F: FieldEntry>(a: &Mat<F>, b: &[F]) -> LinearSolution<F> {
    let n = a.cols();
    let elim = eliminate(a, b);
    let rank = elim.pivot_cols.len();

    for r in rank..a.rows() {
        if !elim.rhs[r].is_zero() {
            return LinearSolution::Infeasible {
                certificate: elim.trans[r].clone(),
            };
        }
    }

    let mut particular = vec![F::zero(); n];
    for (row, &col) in elim.pivot_cols.iter().enumerate() {
        particular[col] = elim.rhs[row].clone();
    }

    let pivot_set: Vec<bool> = {
        let mut s = vec![false; n];
        for &c in &elim.pivot_cols {
            s[c] = true;
        }
        s
    };
    let mut nullspace = Vec::new();
    for free in 0..n {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (row, &col) in elim.pivot_cols.iter().enumerate() {
            v[col] = -elim.work[row][free].clone();
        }
        nullspace.push(v);
    }

    LinearSolution::Solvable {
        particular,
        nullspace,
    }
}

/// Rank of a matrix over a field.
pub fn rank<F: FieldEntry>(a: &Mat<F>) -> usize {
    let zeros = vec![F::zero(); a.rows()];
    eliminate(a, &zeros).pivot_cols.len()
}

/// Exact inverse, `None` when singular.
pub fn invert<F: FieldEntry>(a: &Mat<F>) -> Option<Mat<F>> {
    assert!(a.is_square(), "only square matrices can be inverted");
    let n = a.rows();
    let zeros = vec![F::zero(); n];
    let elim = eliminate(a, &zeros);
    if elim.pivot_cols.len() < n {
        return None;
    }
    // Full pivot rank on a square matrix leaves trans = a^{-1}.
    Some(Mat::from_fn(n, n, |r, c| elim.trans[r][c].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalar::{rat_int, Rational};

    fn m(rows: Vec<Vec<i64>>) -> Mat<Rational> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    fn v(vals: Vec<i64>) -> Vec<Rational> {
        vals.into_iter().map(rat_int).collect()
    }

    #[test]
    fn identity_system() {
        let a = m(vec![vec![1, 0], vec![0, 1]]);
        match solve_linear_system(&a, &v(vec![3, 4])) {
            LinearSolution::Solvable {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, v(vec![3, 4]));
                assert!(nullspace.is_empty());
            }
            _ => panic!("expected solvable"),
        }
    }

    #[test]
    fn zero_matrix_nonzero_rhs_is_infeasible_with_certificate() {
        let a = m(vec![vec![0, 0], vec![0, 0]]);
        let b = v(vec![0, 5]);
        match solve_linear_system(&a, &b) {
            LinearSolution::Infeasible { certificate } => {
                // y·A = 0 trivially; y·b must be nonzero
                let dot: Rational = certificate
                    .iter()
                    .zip(&b)
                    .map(|(y, bi)| y * bi)
                    .sum();
                assert!(!dot.is_zero());
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn rank_deficient_consistent_system() {
        let a = m(vec![vec![1, 1], vec![2, 2]]);
        match solve_linear_system(&a, &v(vec![1, 2])) {
            LinearSolution::Solvable {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, v(vec![1, 0]));
                assert_eq!(nullspace.len(), 1);
                // basis vector spans {(1,-1)}
                let w = &nullspace[0];
                assert_eq!(w[0], -w[1].clone());
                assert!(!w[0].is_zero());
            }
            _ => panic!("expected solvable"),
        }
    }

    #[test]
    fn certificate_contradicts_rhs() {
        let a = m(vec![vec![1, 1], vec![2, 2]]);
        let b = v(vec![1, 3]);
        match solve_linear_system(&a, &b) {
            LinearSolution::Infeasible { certificate } => {
                for c in 0..a.cols() {
                    let dot: Rational = (0..a.rows())
                        .map(|r| &certificate[r] * &a[(r, c)])
                        .sum();
                    assert!(dot.is_zero());
                }
                let dot: Rational = certificate.iter().zip(&b).map(|(y, bi)| y * bi).sum();
                assert!(!dot.is_zero());
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn invert_and_rank() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = invert(&a).unwrap();
        assert_eq!(&a * &inv, Mat::identity(2));
        assert_eq!(&inv * &a, Mat::identity(2));
        assert_eq!(rank(&a), 2);
        assert_eq!(rank(&m(vec![vec![1, 1], vec![2, 2]])), 1);
        assert!(invert(&m(vec![vec![1, 1], vec![2, 2]])).is_none());
    }
}
