//! Dense integer matrices over a generic exact scalar.
//!
//! Row-major, sized at construction. Zero-row and zero-column matrices are
//! legal and show up constantly (rank-0 presentations, empty relation
//! lists), so every operation has to tolerate them.

use crate::int::{Int, Overflow};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Int> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from rows of `i64` literals; test and construction helper.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::from_fn(r, c, |i, j| T::from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                other[(i - self.rows, j)].clone()
            }
        })
    }

    pub fn submatrix_cols(&self, keep: &[usize]) -> Self {
        Mat::from_fn(self.rows, keep.len(), |i, j| self[(i, keep[j])].clone())
    }

    pub fn submatrix_rows(&self, keep: &[usize]) -> Self {
        Mat::from_fn(keep.len(), self.cols, |i, j| self[(keep[i], j)].clone())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc.try_add(&self[(i, k)].try_mul(&other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn try_sub_mat(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.try_sub(b)?;
        }
        Ok(out)
    }

    pub fn try_add_mat(&self, other: &Self) -> Result<Self, Overflow> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.try_add(b)?;
        }
        Ok(out)
    }

    /// `self · v` for a column vector.
    pub fn try_mul_vec(&self, v: &[T]) -> Result<Vec<T>, Overflow> {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.try_add(&self[(i, k)].try_mul(&v[k])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn try_kron(&self, other: &Self) -> Result<Self, Overflow> {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            self[(i, j)].try_mul(&other[(k, l)])?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Column-stacks a matrix into one long vector, column by column.
    pub fn vec_cols(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self[(i, j)].clone());
            }
        }
        out
    }

    /// Inverse of [`Mat::vec_cols`].
    pub fn from_vec_cols(rows: usize, cols: usize, v: &[T]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Mat::from_fn(rows, cols, |i, j| v[j * rows + i].clone())
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn negate_col(&mut self, j: usize) -> Result<(), Overflow> {
        for i in 0..self.rows {
            self[(i, j)] = self[(i, j)].try_neg()?;
        }
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            self[(i, j)] = self[(i, j)].try_neg()?;
        }
        Ok(())
    }

    /// `col_j += q · col_k`.
    pub fn col_add(&mut self, j: usize, k: usize, q: &T) -> Result<(), Overflow> {
        assert_ne!(j, k);
        for i in 0..self.rows {
            let delta = q.try_mul(&self[(i, k)])?;
            self[(i, j)] = self[(i, j)].try_add(&delta)?;
        }
        Ok(())
    }

    /// `row_i += q · row_k`.
    pub fn row_add(&mut self, i: usize, k: usize, q: &T) -> Result<(), Overflow> {
        assert_ne!(i, k);
        for j in 0..self.cols {
            let delta = q.try_mul(&self[(k, j)])?;
            self[(i, j)] = self[(i, j)].try_add(&delta)?;
        }
        Ok(())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
