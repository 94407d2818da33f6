//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Only the handful of operations the deformation data needs: Bareiss
//! determinants, cofactor adjugates and the minimal integral scaling of an
//! inverse, `B = d * M^-1`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix dimension {0} is below 2")]
    TooSmall(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("entry does not fit in a machine integer")]
    Overflow,
}

/// Square integer matrix, row-major, dimension at least 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim < 2 {
            return Err(MatrixError::TooSmall(dim));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(MatrixError::NotSquare { row: i, len: row.len(), expected: dim });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i].clone().into() } else { BigInt::zero() })
    }

    pub(crate) fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter()
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &BigInt> + '_ {
        (0..self.dim).map(move |i| self.get(i, j))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self::from_fn(self.dim, |i, j| (0..self.dim).map(|k| self.get(i, k) * other.get(k, j)).sum()))
    }

    pub fn scale(&self, s: &BigInt) -> IntMatrix {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * s)
    }

    /// `M * v` for a column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// `v * M` for a row vector.
    pub fn vec_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.dim).map(|j| (0..self.dim).map(|i| &v[i] * self.get(i, j)).sum()).collect()
    }

    /// Rows as machine integers, for the combinatorial hot loops.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>, MatrixError> {
        (0..self.dim).map(|i| self.row(i).iter().map(|e| e.to_i64().ok_or(MatrixError::Overflow)).collect()).collect()
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(self.dim, self.entries.clone())
    }

    /// Classical adjugate: `adj(M)[i][j] = (-1)^(i+j) * det(minor(M, j, i))`.
    pub fn adjugate(&self) -> IntMatrix {
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            let mut minor = Vec::with_capacity((n - 1) * (n - 1));
            for r in (0..n).filter(|&r| r != j) {
                for c in (0..n).filter(|&c| c != i) {
                    minor.push(self.get(r, c).clone());
                }
            }
            let det = bareiss_determinant(n - 1, minor);
            if (i + j) % 2 == 0 {
                det
            } else {
                -det
            }
        })
    }

    /// The least positive `d` with `d * M^-1` integral, together with that
    /// matrix. `d = |det| / g` where `g` is the gcd of `det` and every
    /// adjugate entry.
    pub fn minimal_map_matrix(&self) -> Result<(BigInt, IntMatrix), MatrixError> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(MatrixError::Singular);
        }
        let adj = self.adjugate();
        let g = adj.entries.iter().fold(det.abs(), |g, e| g.gcd(e));
        let d = det.abs() / &g;
        let sign = if det.is_negative() { -BigInt::one() } else { BigInt::one() };
        let b = Self::from_fn(self.dim, |i, j| adj.get(i, j) * &sign / &g);
        Ok((d, b))
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_determinant(n: usize, mut m: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = v / &prev;
            }
        }
        prev = m[k * n + k].clone();
    }
    sign * &m[n * n - 1]
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, ")")
    }
}
