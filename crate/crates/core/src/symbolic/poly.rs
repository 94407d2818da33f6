//! Sparse multivariate polynomials with exact coefficients.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;

/// An ordered list of variable names shared by polynomials that combine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring {
    names: Rc<Vec<String>>,
}

impl Ring {
    pub fn new(names: &[&str]) -> Self {
        Ring { names: Rc::new(names.iter().map(|s| s.to_string()).collect()) }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero<C: Coeff>(&self) -> MultiPoly<C> {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant<C: Coeff>(&self, c: C) -> MultiPoly<C> {
        MultiPoly::monomial(self, vec![0; self.len()], c)
    }

    pub fn int<C: Coeff>(&self, n: i64) -> MultiPoly<C> {
        self.constant(C::from_int(n))
    }

    /// The variable `name`; panics if the ring lacks it.
    pub fn var<C: Coeff>(&self, name: &str) -> MultiPoly<C> {
        let i = self.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; self.len()];
        e[i] = 1;
        MultiPoly::monomial(self, e, C::one())
    }
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq)]
pub struct MultiPoly<C: Coeff = BigRational> {
    ring: Ring,
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn monomial(ring: &Ring, exponents: Vec<u32>, c: C) -> Self {
        assert_eq!(exponents.len(), ring.len(), "exponent vector does not match the ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(exponents), c);
        }
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn var_index(&self, name: &str) -> usize {
        self.ring.index(name).unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(self.ring == other.ring, "polynomials live in different rings");
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.constant(C::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.var_index(var);
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Coefficient of `var^k`, as a polynomial in the same ring.
    pub fn coeff_in(&self, var: &str, k: u32) -> Self {
        let i = self.var_index(var);
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut e = m.0.clone();
                e[i] = 0;
                out.terms.insert(Mono(e), c.clone());
            }
        }
        out
    }

    /// Coefficients of `var^0, var^1, ...`.
    pub fn coefficients_in(&self, var: &str) -> Vec<Self> {
        match self.degree_in(var) {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff_in(var, k)).collect(),
        }
    }

    pub fn from_coefficients(var: &Self, coeffs: &[Self]) -> Self {
        let mut out = var.ring.zero();
        let mut power = var.ring.constant(C::one());
        for c in coeffs {
            out = &out + &(c * &power);
            power = &power * var;
        }
        out
    }

    pub fn derivative(&self, var: &str) -> Self {
        let i = self.var_index(var);
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Mono(e), c.mul(&C::from_int(m.0[i] as i64)));
        }
        out
    }

    /// Replaces every variable `x_i` by `images[i]` (all in `target`).
    pub fn compose(&self, target: &Ring, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.ring.len(), "one image per variable");
        let maxdeg: Vec<u32> =
            (0..self.ring.len()).map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Self>> = images
            .iter()
            .zip(&maxdeg)
            .map(|(img, &d)| {
                let mut v = vec![target.constant(C::one())];
                for k in 1..=d as usize {
                    let next = &v[k - 1] * img;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            for (k, v) in t.terms {
                out.add_term(k, v);
            }
        }
        out
    }

    /// Replaces the named variables, leaving the others fixed.
    pub fn substitute(&self, subs: &[(&str, &Self)]) -> Self {
        let images: Vec<Self> = self
            .ring
            .names()
            .iter()
            .map(|n| match subs.iter().find(|(name, _)| name == n) {
                Some((_, p)) => (*p).clone(),
                None => self.ring.var(n),
            })
            .collect();
        self.compose(&self.ring.clone(), &images)
    }

    /// Re-expresses the polynomial over another ring containing all of its
    /// variables that actually occur.
    pub fn to_ring(&self, target: &Ring) -> Option<Self> {
        let map: Vec<Option<usize>> = self.ring.names().iter().map(|n| target.index(n)).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]?] = x;
                }
            }
            out.add_term(Mono(e), c.clone());
        }
        Some(out)
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly { ring: self.ring.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Rescales each coefficient by a factor depending on its monomial.
    pub fn map_terms(&self, mut f: impl FnMut(&Mono, &C) -> C) -> Self {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c));
        }
        out
    }

    /// Largest term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    /// `self / other` when the division is exact.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        self.check_ring(other);
        let (lm, lc) = other.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let e: Vec<u32> = m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect();
            let t = MultiPoly::monomial(&self.ring, e, c.mul(&lc_inv));
            rem = &rem - &(&t * other);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Pseudo-remainder of `self` by `other` as polynomials in `var`.
    pub fn pseudo_rem(&self, other: &Self, var: &str) -> Self {
        let dq = other.degree_in(var).expect("pseudo-division by zero");
        let lq = other.coeff_in(var, dq);
        let x = self.ring.var::<C>(var);
        let mut r = self.clone();
        while let Some(dr) = r.degree_in(var) {
            if dr < dq || r.is_zero() {
                break;
            }
            let lr = r.coeff_in(var, dr);
            r = &(&lq * &r) - &(&(&lr * &x.pow(dr - dq)) * other);
        }
        r
    }

    /// Removes the largest power of `var` dividing `self`.
    pub fn strip_var(&self, var: &str) -> (Self, u32) {
        let i = self.var_index(var);
        let k = self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0);
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e[i] -= k;
            out.terms.insert(Mono(e), c.clone());
        }
        (out, k)
    }

    /// Divides out `factor` as often as it goes.
    pub fn strip_factor(&self, factor: &Self) -> (Self, u32) {
        let mut cur = self.clone();
        let mut k = 0;
        if factor.total_degree().unwrap_or(0) == 0 || cur.is_zero() {
            return (cur, 0);
        }
        while let Some(q) = cur.div_exact(factor) {
            cur = q;
            k += 1;
        }
        (cur, k)
    }

    /// Scaled so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Equality up to a nonzero constant factor.
    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        self.check_ring(other);
        self.monic() == other.monic()
    }
}

impl MultiPoly<BigRational> {
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den / c.denom()))));
        let mut s = BigRational::new(den, num);
        if self.leading().is_some_and(|(_, c)| Signed::is_negative(c)) {
            s = -s;
        }
        self.scale(&s)
    }
}

impl<'a, C: Coeff> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, other: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, other: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.check_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&C::one().neg())
    }
}

impl<'a, C: Coeff> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, other: &'a MultiPoly<C>) -> MultiPoly<C> {
        self.check_ring(other);
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Mono(e), c1.mul(c2));
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coeff> $tr<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $f(self, other: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$f(&other)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    /// Terms from the largest in graded-lex order, `*` between factors and
    /// `^` for powers; coefficients as reduced fractions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let shown = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !shown.is_one() || m.degree() == 0 {
                factors.push(shown.render());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names()[i].clone()),
                    _ => factors.push(alloc::format!("{}^{}", self.ring.names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::coeff::Q8;

    type P = MultiPoly<BigRational>;

    fn ring() -> Ring {
        Ring::new(&["x", "y", "z"])
    }

    #[test]
    fn arithmetic_and_display() {
        let r = ring();
        let x: P = r.var("x");
        let y: P = r.var("y");
        let p = &(&x + &y).pow(2) - &(&x * &x);
        assert_eq!(p.to_string(), "2*x*y + y^2");
        let q = &p - &(&y * &(&r.int(2) * &x));
        assert_eq!(q.to_string(), "y^2");
        assert_eq!((&x - &x).to_string(), "0");
        assert_eq!((&r.int::<BigRational>(-3) * &x).to_string(), "-3*x");
        let half = r.constant(BigRational::new(1.into(), 2.into()));
        assert_eq!((&half - &x).to_string(), "-x + 1/2");
    }

    #[test]
    fn derivative_and_substitution() {
        let r = ring();
        let x: P = r.var("x");
        let y: P = r.var("y");
        let p = &x.pow(3) * &y;
        assert_eq!(p.derivative("x").to_string(), "3*x^2*y");
        let s = p.substitute(&[("x", &(&x + &r.int(1)))]);
        assert_eq!(s.coeff_in("x", 0).to_string(), "y");
        assert_eq!(s.degree_in("x"), Some(3));
        let coeffs = s.coefficients_in("x");
        assert_eq!(P::from_coefficients(&x, &coeffs), s);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x: P = r.var("x");
        let y: P = r.var("y");
        let a = &x + &y;
        let b = &(&x - &y) * &r.int(3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&(&x + &r.int(1))), None);
        let (s, k) = (&prod * &a.pow(2)).strip_factor(&a);
        assert_eq!((s, k), (b, 3));
    }

    #[test]
    fn pseudo_remainder() {
        let r = ring();
        let x: P = r.var("x");
        let y: P = r.var("y");
        // y x^2 - 1 vanishes on roots of y x - 1? no; x^2 y^2 - 1 does modulo x y - 1
        let f = &(&x.pow(2) * &y.pow(2)) - &r.int(1);
        let g = &(&x * &y) - &r.int(1);
        assert!(f.pseudo_rem(&g, "x").is_zero());
        assert!(!(&f + &x).pseudo_rem(&g, "x").is_zero());
    }

    #[test]
    fn primitive_and_scalar_equality() {
        let r = ring();
        let x: P = r.var("x");
        let p = &x.scale(&BigRational::new((-4).into(), 6.into())) + &r.constant(BigRational::new(2.into(), 3.into()));
        assert_eq!(p.primitive().to_string(), "x - 1");
        assert!(p.equal_up_to_scalar(&(&r.int(7) * &p)));
        let (q, k) = (&x.pow(3) * &p).strip_var("x");
        assert_eq!((q, k), (p, 3));
    }

    #[test]
    fn cyclotomic_coefficients() {
        let r = ring();
        let x: MultiPoly<Q8> = r.var("x");
        let i = r.constant(Q8::zeta(2));
        let p = &(&x + &i) * &(&x - &i);
        assert_eq!(p.to_string(), "x^2 + 1");
        let rational: P = r.var("x");
        let lifted = rational.map_coeffs(|c| Q8::from_rational(c.clone()));
        assert_eq!(lifted, x);
        assert_eq!((&x * &i).to_string(), "(zeta8^2)*x");
    }
}
