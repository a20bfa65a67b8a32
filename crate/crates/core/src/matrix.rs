//! Dense matrices with exact entries and the integer-matrix routines the
//! Seifert layer needs (products, Bareiss determinant, signature).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Ragged { row: i, found: r.len(), expected: cols });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn empty() -> Self {
        Self { rows: 0, cols: 0, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Trailing block starting at `(r0, c0)`.
    pub fn trailing_block(&self, r0: usize, c0: usize) -> Self {
        Self::from_fn(self.rows - r0, self.cols - c0, |i, j| self.get(i + r0, j + c0).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl IntMatrix {
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()))
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn neg(&self) -> IntMatrix {
        self.map(|x| -x)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Fraction-free (Bareiss) determinant. The 0×0 determinant is 1.
    pub fn det(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(bareiss_int(self.clone()))
    }

    /// Signature (#positive − #negative eigenvalues) of a symmetric matrix,
    /// by congruence diagonalisation over ℚ.
    pub fn signature(&self) -> Result<i64, MatrixError> {
        if !self.is_symmetric() {
            return Err(MatrixError::SizeMismatch("signature needs a symmetric matrix".into()));
        }
        Ok(symmetric_signature(self.map(|x| BigRational::from_integer(x.clone()))))
    }
}

fn bareiss_int(mut a: IntMatrix) -> BigInt {
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * &pivot - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

fn symmetric_signature(mut a: Matrix<BigRational>) -> i64 {
    let n = a.rows;
    let mut sig = 0i64;
    for k in 0..n {
        if let Some(p) = (k..n).find(|&i| !a.get(i, i).is_zero()) {
            a.swap_rows(k, p);
            a.swap_cols(k, p);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a.get(i, j).is_zero())
        {
            // Both diagonal entries vanish: e_i + e_j has self-product 2·a_ij ≠ 0.
            for c in 0..n {
                let v = a.get(i, c) + a.get(j, c);
                a.set(i, c, v);
            }
            for r in 0..n {
                let v = a.get(r, i) + a.get(r, j);
                a.set(r, i, v);
            }
            a.swap_rows(k, i);
            a.swap_cols(k, i);
        } else {
            break;
        }
        let pivot = a.get(k, k).clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            let f = a.get(i, k) / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let v = a.get(i, j) - &f * a.get(k, j);
                a.set(i, j, v);
            }
        }
        for i in k + 1..n {
            a.set(i, k, BigRational::zero());
            a.set(k, i, BigRational::zero());
        }
    }
    sig
}
