//! Elements of `Z[zeta_d]` stored in the group ring `Z[x]/(x^d - 1)`.
//!
//! Arithmetic happens in the group ring; equality and rationality are
//! decided exactly after reduction modulo the cyclotomic polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    order: u32,
    coeffs: Vec<BigInt>,
}

/// `Phi_d`, ascending coefficients.
pub fn cyclotomic_polynomial(d: u32) -> Vec<i64> {
    assert!(d > 0, "Phi_0 is undefined");
    // x^d - 1 divided by Phi_e for every proper divisor e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = divide_monic(&num, &cyclotomic_polynomial(e));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quot[top - dd] = c;
        for (i, &x) in den.iter().enumerate() {
            rem[top - dd + i] -= c * x;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "cyclotomic division left a remainder");
    quot
}

pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|&k| k.gcd(&d) == 1).count() as u32
}

pub fn units(d: u32) -> Vec<u32> {
    (1..=d).filter(|&k| k.gcd(&d) == 1).map(|k| k % d).collect()
}

impl CyclotomicElement {
    pub fn zero(order: u32) -> Self {
        assert!(order > 0, "order must be positive");
        CyclotomicElement { order, coeffs: vec![BigInt::zero(); order as usize] }
    }

    pub fn from_int(order: u32, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = n.into();
        z
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// `zeta^j`.
    pub fn zeta_power(order: u32, j: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[j.rem_euclid(order as i64) as usize] = BigInt::one();
        z
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), order as usize, "group-ring element needs d coefficients");
        CyclotomicElement { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Group-ring coefficients, index `i` for `zeta^i`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_term(&mut self, j: u32, c: &BigInt) {
        let i = (j % self.order) as usize;
        self.coeffs[i] += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicElement { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        CyclotomicElement { order: self.order, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let d = self.order as usize;
        let mut out = vec![BigInt::zero(); d];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + j) % d] += a * b;
            }
        }
        CyclotomicElement { order: self.order, coeffs: out }
    }

    /// `zeta -> zeta^u`.
    pub fn galois(&self, u: u32) -> Self {
        let d = self.order as u64;
        let mut out = vec![BigInt::zero(); d as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[((i as u64 * u as u64) % d) as usize] += c;
        }
        CyclotomicElement { order: self.order, coeffs: out }
    }

    pub fn conj(&self) -> Self {
        self.galois(self.order - 1)
    }

    /// Remainder modulo `Phi_d`: the coordinates in the power basis
    /// `1, zeta, ..., zeta^{phi(d)-1}`.
    pub fn canonical(&self) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for top in (deg..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut r[top]);
            for (i, &x) in phi[..deg].iter().enumerate() {
                r[top - deg + i] -= &c * x;
            }
        }
        r.truncate(deg);
        r
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.order == other.order && self.sub(other).canonical().iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if any.
    pub fn rational_integer(&self) -> Option<BigInt> {
        let c = self.canonical();
        c[1..].iter().all(Zero::is_zero).then(|| c[0].clone())
    }

    /// Invariance under every `zeta -> zeta^u`, `u` a unit.
    pub fn is_galois_invariant(&self) -> bool {
        let base = self.canonical();
        units(self.order).into_iter().all(|u| self.galois(u).canonical() == base)
    }

    /// Complex value under `zeta -> exp(2 pi i s / d)`.
    pub fn embed(&self, s: u32) -> (f64, f64) {
        let d = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * core::f64::consts::PI * ((i as u64 * s as u64) % self.order as u64) as f64 / d;
            re += c * libm::cos(theta);
            im += c * libm::sin(theta);
        }
        (re, im)
    }

    pub fn abs(&self, s: u32) -> f64 {
        let (re, im) = self.embed(s);
        libm::hypot(re, im)
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.canonical().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        for d in 1..60 {
            assert_eq!(cyclotomic_polynomial(d).len() as u32 - 1, euler_phi(d));
        }
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn arithmetic_and_rationality() {
        let i = CyclotomicElement::zeta_power(4, 1);
        assert_eq!(i.mul(&i).rational_integer(), Some(BigInt::from(-1)));
        let sum: CyclotomicElement =
            (0..8).fold(CyclotomicElement::zero(8), |a, j| a.add(&CyclotomicElement::zeta_power(8, j)));
        assert!(sum.is_zero());
        // sqrt 2 = z + z^7 is Galois-moved by u = 3
        let r2 = CyclotomicElement::zeta_power(8, 1).add(&CyclotomicElement::zeta_power(8, 7));
        assert!(!r2.is_galois_invariant());
        assert_eq!(r2.mul(&r2).rational_integer(), Some(BigInt::from(2)));
        assert!((r2.abs(1) - core::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn norm_is_invariant() {
        let x = CyclotomicElement::from_coeffs(12, (0..12).map(|i| BigInt::from(i * i % 7 - 3)).collect());
        let norm = units(12).into_iter().fold(CyclotomicElement::one(12), |acc, u| acc.mul(&x.galois(u)));
        assert!(norm.is_galois_invariant());
        assert!(norm.rational_integer().is_some());
    }
}
