//! Small dense matrices over exact rings, and index permutations.

use std::fmt;
use std::ops::Neg;

use num_traits::Num;

use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c).clone() + a.clone() * other.get(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<V>(&self, v: &[V]) -> Result<Vec<V>>
    where
        V: Clone + Num + From<T>,
    {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(V::zero(), |acc, (a, x)| {
                        acc + V::from(a.clone()) * x.clone()
                    })
            })
            .collect())
    }

    /// `(a_kl * other)`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            self.get(r / r2, c / c2).clone() * other.get(r % r2, c % c2).clone()
        })
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (r1, c1) = (self.rows, self.cols);
        Self::from_fn(r1 + other.rows, c1 + other.cols, |r, c| {
            match (r < r1, c < c1) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - r1, c - c1).clone(),
                _ => T::zero(),
            }
        })
    }

    /// First `(row, col)` where the two matrices differ, or a shape mismatch.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.cols, i % self.cols))
    }
}

impl<T: Clone + Num + Neg<Output = T>> Matrix<T> {
    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }
}

/// A permutation of `[0, n)`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(image.len(), format!("{image:?}")));
            }
        }
        Ok(Perm { image })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Perm { image: inv }
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Self {
        Perm {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        }
    }

    /// `out[i] = v[image[i]]`.
    pub fn gather<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.image.iter().map(|&j| v[j].clone()).collect()
    }

    /// Row `i` of the result is row `image[i]` of `m`.
    pub fn permute_rows<T: Clone + Num>(&self, m: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.len(), m.cols(), |r, c| m.get(self.image[r], c).clone())
    }

    /// Column `j` of the result is column `image[j]` of `m`.
    pub fn permute_cols<T: Clone + Num>(&self, m: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(m.rows(), self.len(), |r, c| m.get(r, self.image[c]).clone())
    }

    /// The permutation matrix `P` with `P * m == self.permute_rows(m)`.
    pub fn matrix<T: Clone + Num>(&self) -> Matrix<T> {
        Matrix::from_fn(self.len(), self.len(), |r, c| {
            if self.image[r] == c {
                T::one()
            } else {
                T::zero()
            }
        })
    }
}
