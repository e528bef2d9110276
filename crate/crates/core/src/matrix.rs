//! Dense row-major matrices over an arbitrary exact ring.
//!
//! The same container backs matrices over quaternions, Gaussian rationals,
//! plain rationals, and univariate polynomials. Entries are never
//! approximated; equality is structural. Multiplication keeps left/right
//! factor order, so noncommutative entry types are safe.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Entry bound for matrix arithmetic: an exact ring with decidable equality.
pub trait Ring: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{}

/// Dense matrix with row-major storage.
///
/// Zero-dimensional shapes are allowed; they arise from block decompositions
/// of degenerate equation instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Mat<T> {
    /// Builds a matrix from row-major entries. Panics if `data` has the
    /// wrong length.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "matrix data length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|t| f(t)).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<T>
    where
        T: Clone,
    {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Copies out the block with rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat<T>
    where
        T: Clone,
    {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Mat::from_fn(r1 - r0, c1 - c0, |r, c| self[(r0 + r, c0 + c)].clone())
    }
}

impl<T: Clone> Mat<T> {
    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from a nested row list; rows must have equal lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged row in matrix literal");
        }
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl<T: Ring> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    /// `t` on the diagonal, zero elsewhere.
    pub fn scalar(n: usize, t: &T) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { t.clone() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entrywise left multiplication `s * entry`.
    pub fn scale_left(&self, s: &T) -> Self {
        self.map(|e| s.clone() * e.clone())
    }

    /// Entrywise right multiplication `entry * s`.
    pub fn scale_right(&self, s: &T) -> Self {
        self.map(|e| e.clone() * s.clone())
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<'b, T: Ring> Add<&'b Mat<T>> for &Mat<T> {
    type Output = Mat<T>;

    fn add(self, other: &'b Mat<T>) -> Mat<T> {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in matrix add");
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + other[(r, c)].clone()
        })
    }
}

impl<'b, T: Ring> Sub<&'b Mat<T>> for &Mat<T> {
    type Output = Mat<T>;

    fn sub(self, other: &'b Mat<T>) -> Mat<T> {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in matrix sub");
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - other[(r, c)].clone()
        })
    }
}

impl<T: Ring> Neg for &Mat<T> {
    type Output = Mat<T>;

    fn neg(self) -> Mat<T> {
        self.map(|e| -e.clone())
    }
}

impl<'b, T: Ring> Mul<&'b Mat<T>> for &Mat<T> {
    type Output = Mat<T>;

    fn mul(self, other: &'b Mat<T>) -> Mat<T> {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in matrix mul: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        Mat::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(r, k)].clone() * other[(k, c)].clone();
            }
            acc
        })
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Assembles a 2x2 block grid. Every block row must have uniform height,
/// every block column uniform width.
pub fn from_blocks<T: Ring>(blocks: &[&[&Mat<T>]]) -> Mat<T> {
    let block_rows = blocks.len();
    assert!(block_rows > 0, "empty block grid");
    let block_cols = blocks[0].len();
    assert!(
        blocks.iter().all(|row| row.len() == block_cols),
        "ragged block grid"
    );
    let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows()).collect();
    let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols()).collect();
    for (br, row) in blocks.iter().enumerate() {
        for (bc, blk) in row.iter().enumerate() {
            assert_eq!(
                blk.shape(),
                (heights[br], widths[bc]),
                "block ({br},{bc}) has inconsistent shape"
            );
        }
    }
    let rows: usize = heights.iter().sum();
    let cols: usize = widths.iter().sum();
    let mut out = Mat::zero(rows, cols);
    let mut r_off = 0;
    for (br, row) in blocks.iter().enumerate() {
        let mut c_off = 0;
        for (bc, blk) in row.iter().enumerate() {
            for r in 0..heights[br] {
                for c in 0..widths[bc] {
                    out[(r_off + r, c_off + c)] = blk[(r, c)].clone();
                }
            }
            c_off += widths[bc];
        }
        r_off += heights[br];
    }
    out
}

/// `[[a, c], [0, b]]` with `a` m-square, `b` n-square, `c` of shape m x n.
pub fn block_upper_triangular<T: Ring>(a: &Mat<T>, c: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    assert!(a.is_square() && b.is_square(), "diagonal blocks must be square");
    assert_eq!(
        c.shape(),
        (a.rows(), b.cols()),
        "off-diagonal block shape mismatch"
    );
    let zero = Mat::zero(b.rows(), a.cols());
    from_blocks(&[&[a, c], &[&zero, b]])
}

/// Direct sum `[[a, 0], [0, b]]`.
pub fn block_diag<T: Ring>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    assert!(a.is_square() && b.is_square(), "diagonal blocks must be square");
    let zero = Mat::zero(a.rows(), b.cols());
    block_upper_triangular(a, &zero, b)
}
