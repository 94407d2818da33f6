//! Frobenius eigenvalues on the monomial eigenlines of a Fermat
//! hypersurface through Jacobi sums, and characteristic polynomials of
//! Galois-stable sets of types.
//!
//! For `sum x_i^d` in `P^n` over `F_q`, `d | q - 1`, with `chi` of order `d`:
//!
//! `#X(F_q) = sum_{i<n} q^i + sum_k chi^{k_0}(-1) J(chi^{k_1}, ..., chi^{k_n})`
//!
//! over interior types `k`, where `J` sums `prod chi^{k_i}(u_i)` over
//! `u_1 + ... + u_n = 1`. By the Lefschetz trace formula the eigenvalue of
//! Frobenius on the line of `k` is `(-1)^{n-1}` times the `k`-th summand.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::{units, CyclotomicElement};
use crate::deformation::{common_cover, DeformationData};
use crate::field::FieldSpec;
use crate::monomials::{g_invariant_types, lift_types, MonomialError, MonomialType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("no character of order {d} on F_{q}^*")]
    NoCharacter { d: u32, q: u32 },
    #[error("type {0} is not interior")]
    NotInterior(MonomialType),
    #[error("type {k} has modulus {got}, character has order {expected}")]
    ModulusMismatch { k: MonomialType, got: u32, expected: u32 },
    #[error("type {0} has fewer than two entries")]
    TooShort(MonomialType),
    #[error("coefficients not rational: type set is not Galois-stable ({0} is missing a conjugate)")]
    NotGaloisStable(MonomialType),
    #[error("internal consistency: {0}")]
    Internal(&'static str),
    #[error("no common cover")]
    NoCommonCover,
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// `chi(g^j) = zeta_d^j` for the table generator `g`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    d: u32,
    q: u32,
    /// `exponent[x] = log_g(x) mod d` for `x != 0`.
    exponent: Vec<u32>,
    minus_one: u32,
}

impl CharacterTable {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `j` with `chi(x) = zeta_d^j`; `x` must be nonzero.
    pub fn exponent(&self, x: u32) -> u32 {
        self.exponent[x as usize]
    }
}

pub fn multiplicative_character(field: &FieldSpec, d: u32) -> Result<CharacterTable, ZetaError> {
    if d == 0 || !field.order().is_multiple_of(d) {
        return Err(ZetaError::NoCharacter { d, q: field.q() });
    }
    let mut exponent = vec![0u32; field.q() as usize];
    for x in 1..field.q() {
        exponent[x as usize] = field.log(x).expect("nonzero") % d;
    }
    let minus_one = exponent[field.neg(1) as usize];
    Ok(CharacterTable { d, q: field.q(), exponent, minus_one })
}

fn check_type(k: &MonomialType, table: &CharacterTable) -> Result<(), ZetaError> {
    if k.d() != table.d {
        return Err(ZetaError::ModulusMismatch { k: k.clone(), got: k.d(), expected: table.d });
    }
    if k.len() < 2 {
        return Err(ZetaError::TooShort(k.clone()));
    }
    if !k.is_interior() {
        return Err(ZetaError::NotInterior(k.clone()));
    }
    Ok(())
}

/// `chi^{k_0}(-1) J(chi^{k_1}, ..., chi^{k_n})`.
pub fn jacobi_sum(k: &MonomialType, field: &FieldSpec, table: &CharacterTable) -> Result<CyclotomicElement, ZetaError> {
    check_type(k, table)?;
    let d = table.d;
    let e = k.entries();
    let n = e.len() - 1;
    let mut counts = vec![0u64; d as usize];
    // u_1, ..., u_{n-1} nonzero; u_n = 1 - sum, also nonzero
    fn rec(field: &FieldSpec, table: &CharacterTable, e: &[u32], i: usize, sum: u32, acc: u64, counts: &mut [u64]) {
        let d = table.d as u64;
        let n = e.len() - 1;
        if i == n {
            let last = field.sub(1, sum);
            if last != 0 {
                let j = (acc + e[n] as u64 * table.exponent(last) as u64) % d;
                counts[j as usize] += 1;
            }
            return;
        }
        for u in 1..field.q() {
            let j = (acc + e[i] as u64 * table.exponent(u) as u64) % d;
            rec(field, table, e, i + 1, field.add(sum, u), j, counts);
        }
    }
    let start = (e[0] as u64 * table.minus_one as u64) % d as u64;
    if n == 1 {
        counts[start as usize] = 1;
    } else {
        rec(field, table, e, 1, 0, start, &mut counts);
    }
    let coeffs = counts.into_iter().map(BigInt::from).collect();
    Ok(CyclotomicElement::from_coeffs(d, coeffs))
}

/// Eigenvalue of geometric Frobenius on `omega_k`: `(-1)^{n-1}` times
/// [`jacobi_sum`]. Its absolute value is `q^{(n-1)/2}`.
pub fn jacobi_eigenvalue(
    k: &MonomialType,
    field: &FieldSpec,
    table: &CharacterTable,
) -> Result<CyclotomicElement, ZetaError> {
    let j = jacobi_sum(k, field, table)?;
    Ok(if (k.len() - 2).is_multiple_of(2) { j } else { j.neg() })
}

/// `#{x in P^n(F_q) : sum x_i^d = 0}` from Jacobi sums.
pub fn fermat_point_count_via_sums(d: u32, n: usize, field: &FieldSpec) -> Result<BigInt, ZetaError> {
    let table = multiplicative_character(field, d)?;
    let q = BigInt::from(field.q());
    let mut main = BigInt::zero();
    let mut qi = BigInt::one();
    for _ in 0..n {
        main += &qi;
        qi *= &q;
    }
    let mut total = CyclotomicElement::zero(d);
    for k in crate::monomials::enumerate_basis(d, n, false) {
        total = total.add(&jacobi_sum(&k, field, &table)?);
    }
    let s = total.rational_integer().ok_or(ZetaError::Internal("character sum total is not rational"))?;
    Ok(main + s)
}

/// Integer polynomial, ascending in `T`, constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn one() -> Self {
        CharPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly::from_coeffs(out)
    }

    /// Exact quotient in `Z[T]`, if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &CharPoly) -> Option<CharPoly> {
        let dd = divisor.degree();
        if dd > self.degree() {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let (c, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, x) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + i] -= &c * x;
            }
            quot[top - dd] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| CharPoly::from_coeffs(quot))
    }

    pub fn divides(&self, other: &CharPoly) -> bool {
        other.div_exact(self).is_some()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Checks that `types` is closed under `k -> u k` for all units `u`.
pub fn check_galois_stable(types: &[MonomialType]) -> Result<(), ZetaError> {
    let set: BTreeSet<&MonomialType> = types.iter().collect();
    for k in types {
        for u in units(k.d()) {
            let c = k.scale(u as u64);
            if !set.contains(&c) {
                return Err(ZetaError::NotGaloisStable(k.clone()));
            }
        }
    }
    Ok(())
}

/// `prod (1 - alpha T)` over given eigenvalues, read back as integers.
pub fn char_poly_from_eigenvalues(d: u32, eigenvalues: &[CyclotomicElement]) -> Result<CharPoly, ZetaError> {
    let mut poly = vec![CyclotomicElement::one(d)];
    for alpha in eigenvalues {
        let mut next = vec![CyclotomicElement::zero(d); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] = next[i].add(c);
            next[i + 1] = next[i + 1].sub(&c.mul(alpha));
        }
        poly = next;
    }
    let coeffs = poly
        .iter()
        .map(|c| {
            if !c.is_galois_invariant() {
                return Err(ZetaError::Internal("coefficient is not Galois invariant"));
            }
            c.rational_integer().ok_or(ZetaError::Internal("coefficient is not a rational integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CharPoly::from_coeffs(coeffs))
}

/// Characteristic polynomial of Frobenius on the span of `omega_k`,
/// `k` in `types`.
pub fn char_poly_invariant(
    types: &[MonomialType],
    field: &FieldSpec,
    table: &CharacterTable,
) -> Result<CharPoly, ZetaError> {
    check_galois_stable(types)?;
    let mut sorted = types.to_vec();
    sorted.sort();
    sorted.dedup();
    let eig = sorted.iter().map(|k| jacobi_eigenvalue(k, field, table)).collect::<Result<Vec<_>, _>>()?;
    char_poly_from_eigenvalues(table.d, &eig)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFactor {
    pub d: u64,
    pub degree: usize,
    pub char_poly: CharPoly,
    pub divides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonFactorReport {
    pub d: u64,
    pub common_degree: usize,
    pub common: CharPoly,
    pub families: Vec<FamilyFactor>,
}

/// Lifted `G_i`-invariant types of each family at the joint degree `d`.
pub fn lifted_invariant_sets(data: &[DeformationData], d: u64) -> Result<Vec<Vec<MonomialType>>, ZetaError> {
    data.iter().map(|f| Ok(lift_types(&g_invariant_types(f), f.d() as u32, d as u32)?)).collect()
}

pub fn intersect(sets: &[Vec<MonomialType>]) -> Vec<MonomialType> {
    let Some(first) = sets.first() else {
        return Vec::new();
    };
    let rest: Vec<BTreeSet<&MonomialType>> = sets[1..].iter().map(|s| s.iter().collect()).collect();
    first.iter().filter(|k| rest.iter().all(|s| s.contains(k))).cloned().collect()
}

/// Checks at `lambda = 0` that the Frobenius factor on the types invariant
/// under every `G_i` divides the factor of each family.
pub fn verify_common_factor(data: &[DeformationData], field: &FieldSpec) -> Result<CommonFactorReport, ZetaError> {
    let cover = common_cover(data).ok_or(ZetaError::NoCommonCover)?;
    let d = cover.d;
    let table = multiplicative_character(field, d as u32)?;
    let sets = lifted_invariant_sets(data, d)?;
    let common_types = intersect(&sets);
    let common = char_poly_invariant(&common_types, field, &table)?;
    let mut families = Vec::new();
    for (f, s) in data.iter().zip(&sets) {
        let poly = char_poly_invariant(s, field, &table)?;
        families.push(FamilyFactor {
            d: f.d(),
            degree: poly.degree(),
            divides: common.divides(&poly),
            char_poly: poly,
        });
    }
    Ok(CommonFactorReport { d, common_degree: common.degree(), common, families })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin;
    use crate::monomials::{enumerate_basis, gmax_invariant_types};
    use crate::pointcount::{count_points, HypersurfaceSpec};

    fn t(d: u32, e: &[i64]) -> MonomialType {
        MonomialType::new(d, e).unwrap()
    }

    #[test]
    fn characters() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let chi = multiplicative_character(&f5, 4).unwrap();
        // 2 generates F_5^*, so chi(2) = zeta_4
        assert_eq!(chi.exponent(2), 1);
        let trivial = multiplicative_character(&f5, 1).unwrap();
        assert!((1..5).all(|x| trivial.exponent(x) == 0));
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(multiplicative_character(&f7, 4).unwrap_err(), ZetaError::NoCharacter { d: 4, q: 7 });
    }

    #[test]
    fn fermat_counts_match_brute_force() {
        for (d, n, p) in [(4, 3, 5), (3, 2, 7), (4, 3, 13), (1, 3, 5)] {
            let f = FieldSpec::new(p, 1).unwrap();
            let brute = count_points(&HypersurfaceSpec::fermat(d, n), &f).unwrap();
            assert_eq!(fermat_point_count_via_sums(d, n, &f).unwrap(), BigInt::from(brute), "d={d} n={n} q={p}");
        }
    }

    /// `J_0(chi^{k_0}, ..., chi^{k_n})` summed over `u_0 + ... + u_n = 0`,
    /// with `chi^0(0) = 1`.
    fn j0(k: &[u32], f: &FieldSpec, table: &CharacterTable) -> CyclotomicElement {
        let d = table.d();
        let mut acc = CyclotomicElement::zero(d);
        let n = k.len();
        let q = f.q();
        for code in 0..(q as u64).pow(n as u32 - 1) {
            let mut c = code;
            let mut u = vec![0u32; n];
            let mut s = 0;
            for slot in u.iter_mut().take(n - 1) {
                *slot = (c % q as u64) as u32;
                c /= q as u64;
                s = f.add(s, *slot);
            }
            u[n - 1] = f.neg(s);
            let mut e = 0u64;
            let mut zero = false;
            for (ki, ui) in k.iter().zip(&u) {
                if *ui == 0 {
                    if *ki % d != 0 {
                        zero = true;
                    }
                } else {
                    e += *ki as u64 * table.exponent(*ui) as u64;
                }
            }
            if !zero {
                acc.add_term((e % d as u64) as u32, &BigInt::one());
            }
        }
        acc
    }

    #[test]
    fn jacobi_sum_against_j0() {
        let f = FieldSpec::new(13, 1).unwrap();
        let table = multiplicative_character(&f, 4).unwrap();
        for k in enumerate_basis(4, 3, false) {
            let j = jacobi_sum(&k, &f, &table).unwrap();
            let full = j0(k.entries(), &f, &table);
            assert!(full.equals(&j.scale(&BigInt::from(12))), "{k}");
        }
        // boundary types other than 0 contribute nothing
        for k in enumerate_basis(4, 3, true).into_iter().filter(|k| !k.is_interior()) {
            let full = j0(k.entries(), &f, &table);
            if k.entries().iter().all(|&e| e == 0) {
                assert_eq!(full.rational_integer(), Some(BigInt::from(13u32.pow(3))));
            } else {
                assert!(full.is_zero(), "{k}");
            }
        }
    }

    #[test]
    fn weil_magnitude_and_galois() {
        let f = FieldSpec::new(17, 1).unwrap();
        let table = multiplicative_character(&f, 8).unwrap();
        for k in enumerate_basis(8, 3, false) {
            let a = jacobi_eigenvalue(&k, &f, &table).unwrap();
            assert!((a.abs(1) / 17.0 - 1.0).abs() < 1e-9, "{k}");
            for u in [3, 5, 7] {
                let moved = jacobi_eigenvalue(&k.scale(u), &f, &table).unwrap();
                assert!(a.galois(u as u32).equals(&moved));
            }
        }
    }

    #[test]
    fn char_polys() {
        let f = FieldSpec::new(5, 1).unwrap();
        let table = multiplicative_character(&f, 4).unwrap();
        assert_eq!(char_poly_invariant(&[], &f, &table).unwrap(), CharPoly::one());
        let fam1 = builtin("family1").unwrap().data().unwrap();
        let p = char_poly_invariant(&gmax_invariant_types(&fam1), &f, &table).unwrap();
        assert_eq!(p.degree(), 3);
        let err = char_poly_invariant(&[t(4, &[1, 1, 1, 1])], &f, &table).unwrap_err();
        assert!(matches!(err, ZetaError::NotGaloisStable(_)));
    }

    #[test]
    fn generator_independence() {
        let f = FieldSpec::new(13, 1).unwrap();
        let g = f.rebased(5).unwrap();
        let types = enumerate_basis(4, 3, false);
        let a = char_poly_invariant(&types, &f, &multiplicative_character(&f, 4).unwrap()).unwrap();
        let b = char_poly_invariant(&types, &g, &multiplicative_character(&g, 4).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degree(), 21);
    }

    #[test]
    fn exact_division() {
        let p = CharPoly::from_coeffs(vec![1.into(), 0.into(), (-4).into()]);
        let f = CharPoly::from_coeffs(vec![1.into(), 2.into()]);
        assert_eq!(p.div_exact(&f), Some(CharPoly::from_coeffs(vec![1.into(), (-2).into()])));
        assert!(!CharPoly::from_coeffs(vec![1.into(), 3.into()]).divides(&p));
        assert!(CharPoly::one().divides(&p));
    }

    #[test]
    fn common_factor_degrees() {
        let get = |k: &str| builtin(k).unwrap().data().unwrap();
        let f17 = FieldSpec::new(17, 1).unwrap();
        let r = verify_common_factor(&[get("family1"), get("family2"), get("family3")], &f17).unwrap();
        assert_eq!(r.common_degree, 5);
        assert!(r.families.iter().all(|x| x.divides));
        let r = verify_common_factor(&[get("family1"), get("family2")], &f17).unwrap();
        assert_eq!(r.common_degree, 7);
        assert_eq!(r.families[1].degree, 15);
        let r = verify_common_factor(&[get("family2")], &f17).unwrap();
        assert_eq!(r.common, r.families[0].char_poly);
        assert_eq!(
            verify_common_factor(&[get("family1"), get("family9")], &f17).unwrap_err(),
            ZetaError::NoCommonCover
        );
    }
}
