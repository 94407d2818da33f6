//! Discriminants of quadratics and Sylvester resultants.

use alloc::vec::Vec;

use thiserror::Error;

use super::coeff::Coeff;
use super::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("expected degree 2 in {var}, found {found:?}")]
    NotQuadratic { var: alloc::string::String, found: Option<u32> },
    #[error("zero polynomial has no resultant")]
    ZeroInput,
    #[error("Bareiss step left a remainder")]
    InexactStep,
}

/// `B^2 - 4AC` for `p = A var^2 + B var + C`.
pub fn discriminant_in<C: Coeff>(p: &MultiPoly<C>, var: &str) -> Result<MultiPoly<C>, ElimError> {
    let d = p.degree_in(var);
    if d != Some(2) {
        return Err(ElimError::NotQuadratic { var: var.into(), found: d });
    }
    let [c, b, a] = [0, 1, 2].map(|k| p.coeff_in(var, k));
    let four = p.ring().int(4);
    Ok(&(&b * &b) - &(&four * &(&a * &c)))
}

/// Determinant of the Sylvester matrix of `p` and `q` in `var`
/// (`p`'s coefficient rows first).
pub fn resultant<C: Coeff>(p: &MultiPoly<C>, q: &MultiPoly<C>, var: &str) -> Result<MultiPoly<C>, ElimError> {
    let (Some(m), Some(n)) = (p.degree_in(var), q.degree_in(var)) else {
        return Err(ElimError::ZeroInput);
    };
    let (m, n) = (m as usize, n as usize);
    let size = m + n;
    if size == 0 {
        return Ok(p.ring().constant(C::one()));
    }
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let zero = p.ring().zero();
    let mut rows: Vec<Vec<MultiPoly<C>>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = alloc::vec![zero.clone(); size];
        for (k, c) in pc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = alloc::vec![zero.clone(); size];
        for (k, c) in qc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    bareiss(rows)
}

/// Fraction-free determinant; every division is exact.
pub fn bareiss<C: Coeff>(mut m: Vec<Vec<MultiPoly<C>>>) -> Result<MultiPoly<C>, ElimError> {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    let mut negate = false;
    let mut prev = ring.constant(C::one());
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(ring.zero());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev.constant_value().is_some_and(|c| c.is_one()) {
                    v
                } else {
                    v.div_exact(&prev).ok_or(ElimError::InexactStep)?
                };
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}
