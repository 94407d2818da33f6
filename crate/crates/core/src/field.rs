//! Finite fields `F_q`, `q = p^k`, through discrete-log tables.
//!
//! An element is encoded as the integer `sum c_i p^i` of its coefficient
//! vector in `F_p[x]/(f)` for a primitive polynomial `f`; the prime field
//! is therefore the range `0..p` and embeds the same way in every extension.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub const DEFAULT_MAX_Q: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field size {p}^{k} exceeds the bound {max}")]
    TooLarge { p: u64, k: u32, max: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{u} is not prime to q - 1 = {order}")]
    NotAGenerator { u: u64, order: u64 },
}

#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Low-to-high coefficients of the monic modulus, without the leading 1.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|i| i * i <= n).all(|i| !n.is_multiple_of(i))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^k`.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    let p = *prime_factors(q).first().ok_or(FieldError::NotPrimePower(q))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p, k))
}

/// Polynomials over `F_p` reduced modulo a monic degree-`k` modulus.
struct PolyRing<'a> {
    p: u64,
    modulus: &'a [u32],
}

impl PolyRing<'_> {
    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.modulus.len();
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            // x^k = -sum modulus_i x^i
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (self.p - m as u64) * c) % self.p;
            }
        }
        prod.truncate(k);
        prod
    }

    fn pow_x(&self, mut e: u64) -> Vec<u64> {
        let k = self.modulus.len();
        let mut base = vec![0u64; k];
        let mut acc = vec![0u64; k];
        acc[0] = 1;
        if k == 1 {
            base[0] = (self.p - self.modulus[0] as u64) % self.p;
        } else {
            base[1] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

fn encode(p: u64, coeffs: &[u64]) -> u32 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

impl FieldSpec {
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        Self::with_bound(p, k, DEFAULT_MAX_Q)
    }

    pub fn from_order(q: u64, max_q: u64) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q)?;
        Self::with_bound(p, k, max_q)
    }

    pub fn with_bound(p: u64, k: u32, max_q: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p.checked_pow(k).filter(|&q| q <= max_q.min(u32::MAX as u64));
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p, k, max: max_q });
        };
        let order = q - 1;
        let factors = prime_factors(order);
        // Monic modulus with x primitive; the search runs over moduli in
        // increasing encoded order so the choice is deterministic.
        let candidates: Vec<u64> = if k == 1 {
            // x + (p - g): the least primitive root g
            (1..p).map(|g| p - g).collect()
        } else {
            (0..q).collect()
        };
        let modulus = candidates
            .into_iter()
            .map(|code| {
                let mut c = code;
                (0..k)
                    .map(|_| {
                        let r = c % p;
                        c /= p;
                        r as u32
                    })
                    .collect::<Vec<u32>>()
            })
            .find(|m| {
                if m[0] == 0 {
                    return false;
                }
                let ring = PolyRing { p, modulus: m };
                let one = |v: &[u64]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
                one(&ring.pow_x(order)) && factors.iter().all(|&r| !one(&ring.pow_x(order / r)))
            })
            .expect("every finite field has a primitive polynomial");
        let ring = PolyRing { p, modulus: &modulus };
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; k as usize];
        cur[0] = 1;
        let x = ring.pow_x(1);
        for i in 0..order {
            let e = encode(p, &cur);
            exp.push(e);
            log[e as usize] = i as u32;
            cur = ring.mul(&cur, &x);
        }
        let mut f = FieldSpec { p: p as u32, k, q: q as u32, modulus, exp, log, neg: Vec::new() };
        f.neg = (0..q as u32).map(|a| f.sub(0, a)).collect();
        Ok(f)
    }

    /// The same field with discrete logs taken to the base `g^u`.
    pub fn rebased(&self, u: u64) -> Result<Self, FieldError> {
        let order = self.order() as u64;
        let Some(inv) = mod_inverse(u % order, order) else {
            return Err(FieldError::NotAGenerator { u, order });
        };
        let mut out = self.clone();
        for i in 0..order {
            let e = self.exp[((i * u) % order) as usize];
            out.exp[i as usize] = e;
        }
        for a in 1..self.q as usize {
            out.log[a] = ((self.log[a] as u64 * inv) % order) as u32;
        }
        Ok(out)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q - 1`.
    pub fn order(&self) -> u32 {
        self.q - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The generator that the log tables refer to.
    pub fn generator(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if let Some(&n) = self.neg.get(a as usize) {
            return n;
        }
        self.sub(0, a)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return if a >= b { a - b } else { a + self.p - b };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let s = (a % self.p + self.p - b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        let o = self.order();
        self.exp[(if s >= o { s - o } else { s }) as usize]
    }

    /// Discrete log to the table generator; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `g^e` for the table generator `g`.
    pub fn exp(&self, e: i64) -> u32 {
        self.exp[e.rem_euclid(self.order() as i64) as usize]
    }

    /// `a^e`; negative exponents need `a != 0`. `0^0 = 1`.
    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            assert!(e > 0, "zero has no inverse");
            return 0;
        }
        let o = self.order() as i64;
        self.exp((self.log[a as usize] as i64 * e.rem_euclid(o)) % o)
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.pow(a, -1)
    }

    pub fn elements(&self) -> core::ops::Range<u32> {
        0..self.q
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    use num_integer::Integer;
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_tables() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.generator(), 2);
        for a in 1..5 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(1), 4);
        assert_eq!(f.pow(2, 4), 1);
        assert_eq!(f.pow(3, -1), 2);
    }

    #[test]
    fn extension_fields_are_fields() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (2, 4), (7, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            let q = f.q();
            // generator has full order
            let mut seen = alloc::collections::BTreeSet::new();
            for e in 0..f.order() {
                seen.insert(f.exp(e as i64));
            }
            assert_eq!(seen.len() as u32, q - 1);
            // distributivity against the table multiplication
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    let c = (a * 7 + b * 3) % q;
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            // prime subfield: elements fixed by Frobenius are exactly 0..p
            for a in 0..q {
                assert_eq!(f.pow(a, p as i64) == a, a < p as u32, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn characteristic_two_negation() {
        let f = FieldSpec::new(2, 3).unwrap();
        for a in 0..8 {
            assert_eq!(f.neg(a), a);
        }
    }

    #[test]
    fn rebasing() {
        let f = FieldSpec::new(13, 1).unwrap();
        let g = f.rebased(5).unwrap();
        assert_eq!(g.generator(), f.pow(f.generator(), 5));
        for a in 1..13 {
            assert_eq!(g.exp(g.log(a).unwrap() as i64), a);
        }
        assert!(f.rebased(4).is_err());
    }

    #[test]
    fn bounds_and_errors() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(FieldSpec::with_bound(2, 21, 1 << 20), Err(FieldError::TooLarge { .. })));
        assert_eq!(prime_power(49).unwrap(), (7, 2));
        assert!(prime_power(12).is_err());
        assert_eq!(FieldSpec::from_order(9, 100).unwrap().k(), 2);
    }
}
