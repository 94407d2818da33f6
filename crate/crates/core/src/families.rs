//! The ten one-parameter quartic families in `P^3` used throughout the crate.
//!
//! Rows of each matrix are the exponent vectors of the monomials of `F_0`;
//! every family is deformed by `lambda * x0 x1 x2 x3`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::deformation::{DeformationData, DeformationError};
use crate::exactalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub index: usize,
    pub rows: [[u32; 4]; 4],
}

const ROWS: [[[u32; 4]; 4]; 10] = [
    [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]],
    [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 3, 1], [0, 0, 1, 3]],
    [[3, 1, 0, 0], [1, 3, 0, 0], [0, 0, 3, 1], [0, 0, 1, 3]],
    [[4, 0, 0, 0], [0, 1, 3, 0], [0, 0, 1, 3], [0, 3, 0, 1]],
    [[1, 3, 0, 0], [0, 1, 3, 0], [0, 0, 1, 3], [3, 0, 0, 1]],
    [[4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 3, 1], [0, 0, 0, 4]],
    [[3, 1, 0, 0], [1, 3, 0, 0], [0, 0, 3, 1], [0, 0, 0, 4]],
    [[3, 1, 0, 0], [0, 4, 0, 0], [0, 0, 3, 1], [0, 0, 0, 4]],
    [[4, 0, 0, 0], [0, 3, 1, 0], [0, 0, 3, 1], [0, 0, 0, 4]],
    [[3, 1, 0, 0], [0, 3, 1, 0], [0, 0, 3, 1], [0, 0, 0, 4]],
];

pub const DEFORMATION: [u64; 4] = [1, 1, 1, 1];

/// All ten families in order.
pub fn all() -> Vec<Family> {
    (1..=10).map(|i| Family { index: i, rows: ROWS[i - 1] }).collect()
}

/// Looks up `family<i>` or a bare index `i`.
pub fn builtin(key: &str) -> Option<Family> {
    let idx: usize = key.strip_prefix("family").unwrap_or(key).parse().ok()?;
    (1..=10).contains(&idx).then(|| Family { index: idx, rows: ROWS[idx - 1] })
}

impl Family {
    pub fn key(&self) -> String {
        format!("family{}", self.index)
    }

    pub fn matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.rows.iter().map(|r| r.iter().map(|&e| e as i64).collect()).collect();
        IntMatrix::from_rows(&rows).expect("built-in matrices are 4x4")
    }

    pub fn data(&self) -> Result<DeformationData, DeformationError> {
        DeformationData::build(&self.matrix(), &DEFORMATION)
    }

    /// `F_0` written out, e.g. `x0^4+x1^4+x2^3*x3+x2*x3^3`.
    pub fn f0_text(&self) -> String {
        monomial_sum_text(self.rows.iter().map(|r| &r[..]))
    }
}

pub fn monomial_sum_text<'a>(rows: impl Iterator<Item = &'a [u32]>) -> String {
    let mut out = String::new();
    for (i, row) in rows.enumerate() {
        if i > 0 {
            out.push('+');
        }
        let mut first = true;
        for (j, &e) in row.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            if e == 1 {
                out.push_str(&format!("x{j}"));
            } else {
                out.push_str(&format!("x{j}^{e}"));
            }
        }
        if first {
            out.push('1');
        }
    }
    out
}
