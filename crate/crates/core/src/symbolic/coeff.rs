//! Coefficient fields for [`MultiPoly`](super::MultiPoly): `Q` and the
//! cyclotomic fields `Q(zeta_N)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::cyclotomic_polynomial;

pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: BigRational) -> Self;
    fn as_rational(&self) -> Option<BigRational>;
    /// `zeta_n^j`, if the field contains it.
    fn root_of_unity(n: u32, j: i64) -> Option<Self>;
    /// Text for use as a multiplier, e.g. `3/4` or `(1 + 2*zeta8^2)`.
    fn render(&self) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Whether the rendered form should be read as negative, for printing
    /// `a - b` instead of `a + -b`.
    fn is_negative(&self) -> bool {
        self.as_rational().is_some_and(|r| Signed::is_negative(&r))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn root_of_unity(n: u32, j: i64) -> Option<Self> {
        let j = j.rem_euclid(n as i64);
        if j == 0 {
            Some(One::one())
        } else if 2 * j == n as i64 {
            Some(-<BigRational as One>::one())
        } else {
            None
        }
    }
    fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// `Q(zeta_N)` in the power basis `1, z, ..., z^{phi(N)-1}`, `z = zeta_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QZeta<const N: u32> {
    coords: Vec<BigRational>,
}

/// `Q(zeta_8)`: contains `I = z^2` and `sqrt 2 = z + z^7`.
pub type Q8 = QZeta<8>;

impl<const N: u32> QZeta<N> {
    fn modulus() -> Vec<i64> {
        cyclotomic_polynomial(N)
    }

    fn degree() -> usize {
        Self::modulus().len() - 1
    }

    /// Reduces a coefficient list of any length modulo `Phi_N`.
    pub fn from_power_coeffs(mut c: Vec<BigRational>) -> Self {
        let phi = Self::modulus();
        let deg = phi.len() - 1;
        for top in (deg..c.len()).rev() {
            if Zero::is_zero(&c[top]) {
                continue;
            }
            let lead = core::mem::take(&mut c[top]);
            for (i, &x) in phi[..deg].iter().enumerate() {
                c[top - deg + i] -= &lead * BigInt::from(x);
            }
        }
        c.resize(deg, Zero::zero());
        QZeta { coords: c }
    }

    /// `z^j`.
    pub fn zeta(j: i64) -> Self {
        let j = j.rem_euclid(N as i64) as usize;
        let mut c = vec![<BigRational as Zero>::zero(); j + 1];
        c[j] = One::one();
        Self::from_power_coeffs(c)
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Complex conjugation, `z -> z^{-1}`.
    pub fn conj(&self) -> Self {
        let mut c = vec![<BigRational as Zero>::zero(); N as usize];
        for (i, x) in self.coords.iter().enumerate() {
            c[(N as usize - i) % N as usize] += x;
        }
        Self::from_power_coeffs(c)
    }
}

impl<const N: u32> fmt::Debug for QZeta<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<const N: u32> Coeff for QZeta<N> {
    fn zero() -> Self {
        QZeta { coords: vec![<BigRational as Zero>::zero(); Self::degree()] }
    }
    fn one() -> Self {
        Self::from_rational(One::one())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        QZeta { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
    fn sub(&self, other: &Self) -> Self {
        QZeta { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.coords.len();
        let mut prod = vec![<BigRational as Zero>::zero(); 2 * n];
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !Zero::is_zero(*a)) {
            for (j, b) in other.coords.iter().enumerate().filter(|(_, b)| !Zero::is_zero(*b)) {
                prod[i + j] += a * b;
            }
        }
        Self::from_power_coeffs(prod)
    }
    fn neg(&self) -> Self {
        QZeta { coords: self.coords.iter().map(|a| -a).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return None;
        }
        // Solve (self * x) = 1 on the power basis.
        let n = self.coords.len();
        let columns: Vec<Vec<BigRational>> = (0..n).map(|j| self.mul(&Self::zeta(j as i64)).coords).collect();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
                row.push(if i == 0 { One::one() } else { Zero::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !Zero::is_zero(&m[r][col]))?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..n {
                if r != col && !Zero::is_zero(&m[r][col]) {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= y * &f;
                    }
                }
            }
        }
        Some(QZeta { coords: m.into_iter().map(|r| r[n].clone()).collect() })
    }
    fn from_rational(r: BigRational) -> Self {
        let mut z = Self::zero();
        z.coords[0] = r;
        z
    }
    fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }
    fn root_of_unity(n: u32, j: i64) -> Option<Self> {
        N.is_multiple_of(n).then(|| Self::zeta(j * (N / n) as i64))
    }
    fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return alloc::format!("{r}");
        }
        let mut s = String::from("(");
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = Signed::is_negative(c);
            if !first {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            let unit = One::is_one(&a);
            match (i, unit) {
                (0, _) => s.push_str(&alloc::format!("{a}")),
                (1, true) => s.push_str(&alloc::format!("zeta{N}")),
                (1, false) => s.push_str(&alloc::format!("{a}*zeta{N}")),
                (_, true) => s.push_str(&alloc::format!("zeta{N}^{i}")),
                (_, false) => s.push_str(&alloc::format!("{a}*zeta{N}^{i}")),
            }
            first = false;
        }
        s.push(')');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn q8_units() {
        let i = Q8::root_of_unity(4, 1).unwrap();
        assert_eq!(i.mul(&i), Q8::from_int(-1));
        let z = Q8::zeta(1);
        let sqrt2 = z.add(&Q8::zeta(7));
        assert_eq!(sqrt2.mul(&sqrt2), Q8::from_int(2));
        assert_eq!(Q8::zeta(8), Q8::one());
        assert!(Q8::root_of_unity(3, 1).is_none());
    }

    #[test]
    fn q8_inverse() {
        let x = Q8::from_power_coeffs(vec![q(1), q(2), q(0), q(-3)]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), Q8::one());
        assert!(Q8::zero().inv().is_none());
        assert_eq!(Q8::zeta(3).conj(), Q8::zeta(5));
    }

    #[test]
    fn rendering() {
        assert_eq!(Q8::from_int(-3).render(), "-3");
        assert_eq!(Q8::zeta(2).render(), "(zeta8^2)");
        assert_eq!(Q8::from_power_coeffs(vec![q(1), q(0), q(-2)]).render(), "(1 - 2*zeta8^2)");
        assert_eq!(BigRational::new(3.into(), 4.into()).render(), "3/4");
    }
}
