//! Monomial types `k in (Z/d)^{n+1}` with `sum k = 0 mod d`: enumeration,
//! `G` / `G_max` invariance, equivalence classes, reduction of forms on
//! the Fermat complement and the action of signed permutations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::deformation::{DeformationData, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialType {
    d: u32,
    entries: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("entry sum {sum} is not divisible by {d}")]
    NonzeroSum { sum: u64, d: u32 },
    #[error("type must have at least one entry")]
    Empty,
    #[error("exponent {index} is zero; reduction needs exponents >= 1")]
    ZeroExponent { index: usize },
    #[error("c undefined for this family: weights {0:?} are not all equal")]
    UnequalWeights(Vec<u64>),
    #[error("substitution is not a permutation of {0} coordinates")]
    NotAPermutation(usize),
    #[error("scaling exp(2 pi i {num}/{den}) has order not dividing {d}")]
    ScalingOrder { num: u32, den: u32, d: u32 },
    #[error("{0} does not divide {1}")]
    NotDivisible(u32, u32),
}

impl MonomialType {
    /// Reduces `entries` mod `d` and checks the zero-sum condition.
    pub fn new(d: u32, entries: &[i64]) -> Result<Self, MonomialError> {
        if d == 0 {
            return Err(MonomialError::ZeroModulus);
        }
        if entries.is_empty() {
            return Err(MonomialError::Empty);
        }
        let entries: Vec<u32> = entries.iter().map(|&e| e.rem_euclid(d as i64) as u32).collect();
        let sum: u64 = entries.iter().map(|&e| e as u64).sum();
        if !sum.is_multiple_of(d as u64) {
            return Err(MonomialError::NonzeroSum { sum, d });
        }
        Ok(MonomialType { d, entries })
    }

    pub(crate) fn from_reduced(d: u32, entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < d));
        MonomialType { d, entries }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_interior(&self) -> bool {
        self.entries.iter().all(|&e| e != 0)
    }

    /// `(u * k) mod d`.
    pub fn scale(&self, u: u64) -> MonomialType {
        let d = self.d as u64;
        MonomialType::from_reduced(self.d, self.entries.iter().map(|&e| ((e as u64 * (u % d)) % d) as u32).collect())
    }

    /// `(k + v) mod d`.
    pub fn shift(&self, v: &[u64]) -> MonomialType {
        let d = self.d as u64;
        MonomialType::from_reduced(
            self.d,
            self.entries.iter().zip(v).map(|(&e, &x)| ((e as u64 + x % d) % d) as u32).collect(),
        )
    }

    /// Pole order `sum k / d` of the form `omega_k` on the Fermat complement.
    pub fn pole_order(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum::<u64>() / self.d as u64
    }
}

impl fmt::Display for MonomialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Calls `visit` on every `(n+1)`-tuple over `[lo, d)` summing to 0 mod `d`,
/// in lexicographic order.
pub fn for_each_type(d: u32, n: usize, allow_zero: bool, mut visit: impl FnMut(&[u32])) {
    let lo = if allow_zero { 0 } else { 1 };
    if d <= lo {
        return;
    }
    let mut buf = vec![lo; n + 1];
    loop {
        let partial: u64 = buf[..n].iter().map(|&e| e as u64).sum();
        let last = ((d as u64 - partial % d as u64) % d as u64) as u32;
        if last >= lo {
            buf[n] = last;
            visit(&buf);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            buf[i] += 1;
            if buf[i] < d {
                break;
            }
            buf[i] = lo;
        }
    }
}

/// All types of length `n + 1` mod `d`; interior ones only unless
/// `allow_zero_entries`. Sorted lexicographically.
pub fn enumerate_basis(d: u32, n: usize, allow_zero_entries: bool) -> Vec<MonomialType> {
    let mut out = Vec::new();
    for_each_type(d, n, allow_zero_entries, |k| out.push(MonomialType::from_reduced(d, k.to_vec())));
    out
}

pub fn is_gmax_invariant(k: &MonomialType, b: &[u64], d: u32) -> bool {
    let d64 = d as u64;
    (0..d64).any(|t| k.entries.iter().zip(b).all(|(&e, &bi)| e as u64 == (t * bi) % d64))
}

/// The distinct interior multiples `t * b mod d`.
pub fn gmax_invariant_types(data: &DeformationData) -> Vec<MonomialType> {
    let d = data.d() as u32;
    let zero = MonomialType::from_reduced(d, vec![0; data.len()]);
    let set: BTreeSet<MonomialType> = (1..data.d())
        .map(|t| zero.shift(&data.cover_exponents().iter().map(|b| b * t).collect::<Vec<_>>()))
        .filter(MonomialType::is_interior)
        .collect();
    set.into_iter().collect()
}

fn a_kernel_test(entries: &[u32], rows: &[Vec<i64>], d: i64) -> bool {
    (0..rows.len()).all(|j| rows.iter().zip(entries).map(|(r, &e)| r[j] * e as i64).sum::<i64>().rem_euclid(d) == 0)
}

/// `k = m B mod d` for some integer `m`, tested as `k A = 0 mod d`.
pub fn is_g_invariant(k: &MonomialType, data: &DeformationData) -> bool {
    a_kernel_test(&k.entries, data.coefficient_rows(), data.d() as i64)
}

/// Interior `G`-invariant types, sorted.
pub fn g_invariant_types(data: &DeformationData) -> Vec<MonomialType> {
    let d = data.d() as u32;
    let rows = data.coefficient_rows();
    let mut out = Vec::new();
    for_each_type(d, data.len() - 1, false, |k| {
        if a_kernel_test(k, rows, d as i64) {
            out.push(MonomialType::from_reduced(d, k.to_vec()));
        }
    });
    out
}

impl GroupSpec {
    /// Whether the group fixes `omega_k`.
    pub fn fixes(&self, k: &MonomialType) -> bool {
        match self {
            GroupSpec::FromData { d, coefficient, .. } => a_kernel_test(&k.entries, coefficient, *d as i64),
            GroupSpec::Max { d, b } => is_gmax_invariant(k, b, *d as u32),
        }
    }

    pub fn invariant_types(&self, n: usize) -> Vec<MonomialType> {
        let d = self.d() as u32;
        let mut out = Vec::new();
        for_each_type(d, n, false, |k| {
            let k = MonomialType::from_reduced(d, k.to_vec());
            if self.fixes(&k) {
                out.push(k);
            }
        });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionTriple {
    pub pf: usize,
    pub dim_w: usize,
    pub c: usize,
}

pub fn dimension_triple(data: &DeformationData) -> Result<DimensionTriple, MonomialError> {
    let w = data.weights();
    if w.iter().any(|&x| x != w[0]) {
        return Err(MonomialError::UnequalWeights(w.to_vec()));
    }
    let pf = gmax_invariant_types(data).len();
    let g = g_invariant_types(data).len();
    let reduced = (data.d() / w[0]) as u32;
    let mut full = 0usize;
    for_each_type(reduced, data.len() - 1, false, |_| full += 1);
    Ok(DimensionTriple { pf, dim_w: g - pf, c: full - g })
}

/// Sorted blocks, each block sorted, blocks ordered by their least element.
pub type Partition = Vec<Vec<MonomialType>>;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn partition_by(types: &[MonomialType], mut neighbours: impl FnMut(&MonomialType) -> Vec<MonomialType>) -> Partition {
    let sorted: Vec<MonomialType> = types.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let mut uf = UnionFind((0..sorted.len()).collect());
    for (i, k) in sorted.iter().enumerate() {
        for other in neighbours(k) {
            if let Ok(j) = sorted.binary_search(&other) {
                uf.union(i, j);
            }
        }
    }
    let mut blocks: Vec<Vec<MonomialType>> = vec![Vec::new(); sorted.len()];
    for (i, k) in sorted.iter().enumerate() {
        let r = uf.find(i);
        blocks[r].push(k.clone());
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// Components of the graph joining `k` and `k + b mod d` inside `types`.
pub fn strong_classes(types: &[MonomialType], b: &[u64], _d: u32) -> Partition {
    partition_by(types, |k| vec![k.shift(b)])
}

/// Strong classes merged further along `k -> u k` for units `u mod d`.
///
/// This is a reconstruction: it reproduces the weak classes of the
/// `d = 80` example family, but has not been checked against a formal
/// definition.
pub fn weak_classes(types: &[MonomialType], b: &[u64], d: u32) -> Partition {
    let units: Vec<u64> = (1..d as u64).filter(|u| u.gcd(&(d as u64)) == 1).collect();
    partition_by(types, |k| {
        let mut v = vec![k.shift(b)];
        v.extend(units.iter().map(|&u| k.scale(u)));
        v
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedForm {
    Zero,
    Form { coefficient: BigRational, basis: MonomialType },
}

/// Reduces `y^(m-1) Omega / F^t` on the Fermat complement `F = sum y_i^d`
/// to a multiple of an interior basis form. `m_i` are the type entries,
/// i.e. numerator exponents plus one; `t = sum m_i / d`.
///
/// Lowering `m_i > d` by `d` uses `y_i^d = (y_i / d) dF/dy_i` and the
/// Griffiths-Dwork relation, contributing `(m_i - d) / ((t - 1) d)`.
pub fn reduce_form(exponents: &[u64], d: u32) -> Result<ReducedForm, MonomialError> {
    if d == 0 {
        return Err(MonomialError::ZeroModulus);
    }
    if exponents.is_empty() {
        return Err(MonomialError::Empty);
    }
    if let Some(index) = exponents.iter().position(|&e| e == 0) {
        return Err(MonomialError::ZeroExponent { index });
    }
    let d64 = d as u64;
    let sum: u64 = exponents.iter().sum();
    if !sum.is_multiple_of(d64) {
        return Err(MonomialError::NonzeroSum { sum, d });
    }
    if exponents.iter().any(|&m| m % d64 == 0) {
        return Ok(ReducedForm::Zero);
    }
    let mut t = sum / d64;
    let mut coefficient = BigRational::one();
    let mut basis = Vec::with_capacity(exponents.len());
    for &m in exponents {
        let mut m = m;
        while m > d64 {
            t -= 1;
            coefficient *= BigRational::new(BigInt::from(m - d64), BigInt::from(t * d64));
            m -= d64;
        }
        basis.push(m as u32);
    }
    Ok(ReducedForm::Form { coefficient, basis: MonomialType::from_reduced(d, basis) })
}

/// `exp(2 pi i num / den)` with `num / den` in lowest terms, `0 <= num < den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u32,
    den: u32,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };
    pub const I: RootOfUnity = RootOfUnity { num: 1, den: 4 };

    pub fn new(num: i64, den: u32) -> Self {
        assert!(den > 0, "root of unity with zero denominator");
        let num = num.rem_euclid(den as i64) as u32;
        let g = num.gcd(&den);
        RootOfUnity { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        self.den
    }

    pub fn pow(self, e: u64) -> RootOfUnity {
        RootOfUnity::new(((self.num as u64 * (e % self.den as u64)) % self.den as u64) as i64, self.den)
    }

    /// Exponent `j` with `self = zeta_n^j`, if `order | n`.
    pub fn exponent_in(&self, n: u32) -> Option<u32> {
        n.is_multiple_of(self.den).then(|| self.num * (n / self.den))
    }
}

impl core::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, other: RootOfUnity) -> RootOfUnity {
        let den = self.den.lcm(&other.den);
        let num = self.num as i64 * (den / self.den) as i64 + other.num as i64 * (den / other.den) as i64;
        RootOfUnity::new(num, den)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "1"),
            (1, 2) => write!(f, "-1"),
            (1, 4) => write!(f, "I"),
            (3, 4) => write!(f, "-I"),
            (n, d) => write!(f, "zeta_{d}^{n}"),
        }
    }
}

/// `x_i -> scales[i] * x_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub scales: Vec<RootOfUnity>,
}

impl SignedPermutation {
    pub fn identity(len: usize) -> Self {
        SignedPermutation { perm: (0..len).collect(), scales: vec![RootOfUnity::ONE; len] }
    }

    /// `(x0, x1, x2, x3) -> (x1, x0, x2, x3)`.
    pub fn sigma() -> Self {
        SignedPermutation { perm: vec![1, 0, 2, 3], scales: vec![RootOfUnity::ONE; 4] }
    }

    /// `(x0, x1, x2, x3) -> (-x1, -x0, x2, x3)`.
    pub fn tau() -> Self {
        let m = RootOfUnity::MINUS_ONE;
        SignedPermutation { perm: vec![1, 0, 2, 3], scales: vec![m, m, RootOfUnity::ONE, RootOfUnity::ONE] }
    }

    /// `(x0, x1, x2, x3) -> (I x1, -I x0, x2, x3)`.
    pub fn tau1() -> Self {
        SignedPermutation {
            perm: vec![1, 0, 2, 3],
            scales: vec![RootOfUnity::I, RootOfUnity::new(3, 4), RootOfUnity::ONE, RootOfUnity::ONE],
        }
    }

    fn permutation_sign(&self) -> Result<RootOfUnity, MonomialError> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = *self.perm.get(i).filter(|&&j| j < n).ok_or(MonomialError::NotAPermutation(n))?;
                len += 1;
            }
            if i != start {
                return Err(MonomialError::NotAPermutation(n));
            }
            transpositions += len - 1;
        }
        Ok(if transpositions % 2 == 0 { RootOfUnity::ONE } else { RootOfUnity::MINUS_ONE })
    }
}

/// Pulls `omega_m = y^(m-1) Omega / F^t` back along a signed permutation
/// and returns `(c, m')` with the pullback equal to `c * omega_{m'}`.
/// The factor includes the sign of the permutation acting on `Omega`.
pub fn automorphism_action(
    subst: &SignedPermutation,
    m: &MonomialType,
) -> Result<(RootOfUnity, MonomialType), MonomialError> {
    let n = m.len();
    if subst.perm.len() != n || subst.scales.len() != n {
        return Err(MonomialError::NotAPermutation(n));
    }
    let mut scalar = subst.permutation_sign()?;
    for s in &subst.scales {
        if !m.d.is_multiple_of(s.order()) {
            return Err(MonomialError::ScalingOrder { num: s.num, den: s.den, d: m.d });
        }
    }
    let mut out = vec![0u32; n];
    for i in 0..n {
        scalar = scalar * subst.scales[i].pow(m.entries[i] as u64);
        out[subst.perm[i]] = m.entries[i];
    }
    Ok((scalar, MonomialType::from_reduced(m.d, out)))
}

/// Lifts types from modulus `d_from` to `d_to` by `k -> (d_to / d_from) k`.
pub fn lift_types(types: &[MonomialType], d_from: u32, d_to: u32) -> Result<Vec<MonomialType>, MonomialError> {
    if d_from == 0 || !d_to.is_multiple_of(d_from) {
        return Err(MonomialError::NotDivisible(d_from, d_to));
    }
    let f = d_to / d_from;
    let mut out: Vec<MonomialType> =
        types.iter().map(|k| MonomialType::from_reduced(d_to, k.entries.iter().map(|&e| e * f).collect())).collect();
    out.sort();
    Ok(out)
}
