//! Delsarte deformation data `(A, a) -> (d, B, w, b)` and common covers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::{IntMatrix, MatrixError};

/// A clause of the coefficient-matrix definition that a matrix fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NegativeEntry { row: usize, col: usize },
    ZeroDeterminant,
    ColumnWithoutZero { col: usize },
    NonPositiveWeight { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeEntry { row, col } => write!(f, "entry ({row},{col}) is negative"),
            Violation::ZeroDeterminant => write!(f, "determinant is zero"),
            Violation::ColumnWithoutZero { col } => write!(f, "column {col} contains no zero"),
            Violation::NonPositiveWeight { index } => {
                write!(f, "entry {index} of A^-1 (1,...,1)^T is not positive")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("not a coefficient matrix: {}", join_violations(.0))]
    InvalidMatrix(Vec<Violation>),
    #[error("deformation vector has length {got}, matrix has dimension {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("not a deformation vector: sum a_i w_i = {weighted} but d = {d}")]
    NotDeformationVector { weighted: u64, d: u64 },
    #[error("negative cover exponent b_{index} = {value}")]
    NegativeCoverExponent { index: usize, value: BigInt },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn join_violations(v: &[Violation]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push_str("; ");
        }
        let _ = write!(s, "{x}");
    }
    s
}

/// Checks every clause of the coefficient-matrix definition and reports
/// the ones that fail. An empty report means `a` is a coefficient matrix.
pub fn validate_coefficient_matrix(a: &IntMatrix) -> Vec<Violation> {
    let n = a.dim();
    let mut report = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j).is_negative() {
                report.push(Violation::NegativeEntry { row: i, col: j });
            }
        }
    }
    let det = a.determinant();
    if det.is_zero() {
        report.push(Violation::ZeroDeterminant);
    }
    for j in 0..n {
        if !a.column(j).any(Zero::is_zero) {
            report.push(Violation::ColumnWithoutZero { col: j });
        }
    }
    if !det.is_zero() {
        // sign(A^-1 1) = sign(det) * sign(adj 1)
        let adj = a.adjugate();
        for i in 0..n {
            let s: BigInt = adj.row(i).iter().sum();
            if s.is_zero() || s.is_negative() != det.is_negative() {
                report.push(Violation::NonPositiveWeight { index: i });
            }
        }
    }
    report
}

/// Deformation parameter: a concrete prime-field value or left symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Lambda {
    #[default]
    Symbolic,
    Value(u64),
}

/// The tuple `(A, a, d, B, w, b)` of one family and its Fermat cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationData {
    coefficient: IntMatrix,
    deformation: Vec<u64>,
    d: u64,
    map: IntMatrix,
    weights: Vec<u64>,
    cover: Vec<u64>,
    coefficient_small: Vec<Vec<i64>>,
    map_small: Vec<Vec<i64>>,
    pub lambda: Lambda,
}

impl DeformationData {
    pub fn build(a: &IntMatrix, deformation: &[u64]) -> Result<Self, DeformationError> {
        let report = validate_coefficient_matrix(a);
        if !report.is_empty() {
            return Err(DeformationError::InvalidMatrix(report));
        }
        let n1 = a.dim();
        if deformation.len() != n1 {
            return Err(DeformationError::LengthMismatch { got: deformation.len(), expected: n1 });
        }
        let (d, map) = a.minimal_map_matrix()?;
        let d = d.to_u64().ok_or(MatrixError::Overflow)?;
        let ones = alloc::vec![BigInt::from(1); n1];
        let weights: Vec<u64> =
            map.mul_vec(&ones).iter().map(|w| w.to_u64().ok_or(MatrixError::Overflow)).collect::<Result<_, _>>()?;
        let weighted: u64 = weights.iter().zip(deformation).map(|(w, a)| w * a).sum();
        if weighted != d {
            return Err(DeformationError::NotDeformationVector { weighted, d });
        }
        let a_big: Vec<BigInt> = deformation.iter().map(|&x| BigInt::from(x)).collect();
        let mut cover = Vec::with_capacity(n1);
        for (index, value) in map.vec_mul(&a_big).into_iter().enumerate() {
            if value.is_negative() {
                return Err(DeformationError::NegativeCoverExponent { index, value });
            }
            cover.push(value.to_u64().ok_or(MatrixError::Overflow)?);
        }
        Ok(DeformationData {
            coefficient_small: a.to_i64_rows()?,
            map_small: map.to_i64_rows()?,
            coefficient: a.clone(),
            deformation: deformation.to_vec(),
            d,
            map,
            weights,
            cover,
            lambda: Lambda::Symbolic,
        })
    }

    pub fn with_lambda(mut self, lambda: Lambda) -> Self {
        self.lambda = lambda;
        self
    }

    /// Number of variables, `n + 1`.
    pub fn len(&self) -> usize {
        self.deformation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deformation.is_empty()
    }

    pub fn coefficient_matrix(&self) -> &IntMatrix {
        &self.coefficient
    }

    pub fn deformation_vector(&self) -> &[u64] {
        &self.deformation
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn map_matrix(&self) -> &IntMatrix {
        &self.map
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `b = a B`, the exponent vector of the deformation monomial on the cover.
    pub fn cover_exponents(&self) -> &[u64] {
        &self.cover
    }

    pub(crate) fn coefficient_rows(&self) -> &[Vec<i64>] {
        &self.coefficient_small
    }

    pub(crate) fn map_rows(&self) -> &[Vec<i64>] {
        &self.map_small
    }

    pub fn group(&self, kind: GroupKind) -> GroupSpec {
        match kind {
            GroupKind::FromData => GroupSpec::FromData {
                d: self.d,
                coefficient: self.coefficient_small.clone(),
                map: self.map_small.clone(),
            },
            GroupKind::Max => GroupSpec::Max { d: self.d, b: self.cover.clone() },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// The quotient group `G` of the cover map of one family.
    FromData,
    /// `G_max`, all torus automorphisms of the deformed Fermat cover.
    Max,
}

/// A subgroup of `(Z/dZ)^n`, represented through which monomial types it
/// fixes (see `monomials`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    FromData { d: u64, coefficient: Vec<Vec<i64>>, map: Vec<Vec<i64>> },
    Max { d: u64, b: Vec<u64> },
}

impl GroupSpec {
    pub fn kind(&self) -> GroupKind {
        match self {
            GroupSpec::FromData { .. } => GroupKind::FromData,
            GroupSpec::Max { .. } => GroupKind::Max,
        }
    }

    pub fn d(&self) -> u64 {
        match self {
            GroupSpec::FromData { d, .. } | GroupSpec::Max { d, .. } => *d,
        }
    }
}

/// A joint Fermat cover of several families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonCover {
    pub d: u64,
    pub b: Vec<u64>,
}

impl CommonCover {
    /// The same cover viewed at degree `multiple * d`.
    pub fn scaled(&self, multiple: u64) -> CommonCover {
        CommonCover { d: self.d * multiple, b: self.b.iter().map(|x| x * multiple).collect() }
    }
}

/// The least common cover of `families`, if their normalized vectors
/// `a A^-1 = b / d` are pairwise proportional.
pub fn common_cover(families: &[DeformationData]) -> Option<CommonCover> {
    let first = families.first()?;
    for other in &families[1..] {
        if other.len() != first.len() || !proportional(first.cover_exponents(), other.cover_exponents()) {
            return None;
        }
    }
    let d = families.iter().fold(1u64, |acc, f| acc.lcm(&f.d()));
    let b = first.cover_exponents().iter().map(|x| x * (d / first.d())).collect();
    Some(CommonCover { d, b })
}

fn proportional(x: &[u64], y: &[u64]) -> bool {
    (0..x.len()).all(|i| (0..x.len()).all(|j| x[i] as u128 * y[j] as u128 == x[j] as u128 * y[i] as u128))
}
