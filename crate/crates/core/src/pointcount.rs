//! Brute-force point counts on weighted projective hypersurfaces over
//! `F_q`, general-position scans and an empirical check of the cover map
//! `Y_lambda -> X_lambda`.
//!
//! Coefficients are integers read in the prime field, so the same
//! hypersurface can be scanned over every extension of `F_p`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::deformation::DeformationData;
use crate::field::{FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointCountError {
    #[error("term {index} has weighted degree {got}, expected {expected}")]
    Inhomogeneous { index: usize, got: u64, expected: u64 },
    #[error("term {index} has {got} exponents for {expected} variables")]
    Arity { index: usize, got: usize, expected: usize },
    #[error("weights must be positive and at least two variables are needed")]
    BadWeights,
    #[error("characteristic {p} divides the degree {d}")]
    CharacteristicDividesDegree { p: u32, d: u64 },
    #[error("cone count {cone} - 1 is not divisible by q - 1 = {order}")]
    InexactQuotient { cone: u64, order: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub exponents: Vec<u32>,
    /// Integer representative, reduced into the prime field when evaluated.
    pub coefficient: i64,
}

impl Term {
    pub fn new(exponents: Vec<u32>, coefficient: i64) -> Self {
        Term { exponents, coefficient }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    weights: Vec<u64>,
    terms: Vec<Term>,
    lambda_term: Option<Term>,
    degree: u64,
}

impl HypersurfaceSpec {
    pub fn new(weights: Vec<u64>, terms: Vec<Term>, lambda_term: Option<Term>) -> Result<Self, PointCountError> {
        if weights.len() < 2 || weights.contains(&0) {
            return Err(PointCountError::BadWeights);
        }
        let mut degree = None;
        for (index, t) in terms.iter().chain(lambda_term.iter()).enumerate() {
            if t.exponents.len() != weights.len() {
                return Err(PointCountError::Arity { index, got: t.exponents.len(), expected: weights.len() });
            }
            let got: u64 = t.exponents.iter().zip(&weights).map(|(&e, &w)| e as u64 * w).sum();
            match degree {
                None => degree = Some(got),
                Some(expected) if expected != got => {
                    return Err(PointCountError::Inhomogeneous { index, got, expected })
                }
                _ => {}
            }
        }
        Ok(HypersurfaceSpec { weights, terms, lambda_term, degree: degree.unwrap_or(0) })
    }

    /// The zero polynomial: every point of `P^n` counts.
    pub fn projective_space(n: usize) -> Self {
        HypersurfaceSpec { weights: vec![1; n + 1], terms: Vec::new(), lambda_term: None, degree: 0 }
    }

    /// `sum x_i^d` in `P^n`.
    pub fn fermat(d: u32, n: usize) -> Self {
        let terms = (0..=n)
            .map(|i| {
                let mut e = vec![0; n + 1];
                e[i] = d;
                Term::new(e, 1)
            })
            .collect();
        HypersurfaceSpec { weights: vec![1; n + 1], terms, lambda_term: None, degree: d as u64 }
    }

    /// `X_lambda`: `sum_i prod_j x_j^{A_ij} + lambda x^a` in `P(w)`.
    pub fn delsarte(data: &DeformationData, lambda: i64) -> Self {
        let terms =
            data.coefficient_rows().iter().map(|r| Term::new(r.iter().map(|&e| e as u32).collect(), 1)).collect();
        let a = data.deformation_vector().iter().map(|&e| e as u32).collect();
        HypersurfaceSpec {
            weights: data.weights().to_vec(),
            terms,
            lambda_term: Some(Term::new(a, lambda)),
            degree: data.d(),
        }
    }

    /// `Y_lambda`: `sum y_i^d + lambda y^b` in `P^n`.
    pub fn fermat_cover(data: &DeformationData, lambda: i64) -> Self {
        let mut s = Self::fermat(data.d() as u32, data.len() - 1);
        s.lambda_term = Some(Term::new(data.cover_exponents().iter().map(|&e| e as u32).collect(), lambda));
        s
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn lambda_term(&self) -> Option<&Term> {
        self.lambda_term.as_ref()
    }

    pub fn with_lambda(&self, lambda: i64) -> Self {
        let mut s = self.clone();
        if let Some(t) = &mut s.lambda_term {
            t.coefficient = lambda;
        }
        s
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let move_vec = |v: &[u32]| {
            let mut out = vec![0; v.len()];
            for (i, &e) in v.iter().enumerate() {
                out[perm[i]] = e;
            }
            out
        };
        let mut weights = vec![0; self.weights.len()];
        for (i, &w) in self.weights.iter().enumerate() {
            weights[perm[i]] = w;
        }
        HypersurfaceSpec {
            weights,
            terms: self.terms.iter().map(|t| Term::new(move_vec(&t.exponents), t.coefficient)).collect(),
            lambda_term: self.lambda_term.as_ref().map(|t| Term::new(move_vec(&t.exponents), t.coefficient)),
            degree: self.degree,
        }
    }

    pub fn with_scaled_weights(&self, s: u64) -> Self {
        let mut out = self.clone();
        out.weights.iter_mut().for_each(|w| *w *= s);
        out.degree *= s;
        out
    }

    fn all_terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter().chain(self.lambda_term.iter())
    }

    fn check_characteristic(&self, field: &FieldSpec) -> Result<(), PointCountError> {
        let p = field.p() as u64;
        if self.all_terms().next().is_some() && self.degree.is_multiple_of(p) {
            return Err(PointCountError::CharacteristicDividesDegree { p: field.p(), d: self.degree });
        }
        Ok(())
    }
}

/// What a coordinate ranges over during a walk of the affine cone.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Domain {
    Zero,
    One,
    Fixed(u32),
    All,
    NonZero,
}

/// Monomial values of a fixed term list, accumulated coordinate by
/// coordinate through per-variable power tables.
struct Walker<'a> {
    field: &'a FieldSpec,
    /// `powers[t][j][x] = x^{e_tj}`
    powers: Vec<Vec<Vec<u32>>>,
    nvars: usize,
}

impl<'a> Walker<'a> {
    fn new(field: &'a FieldSpec, terms: &[&Term], nvars: usize) -> Self {
        let powers = terms
            .iter()
            .map(|t| t.exponents.iter().map(|&e| field.elements().map(|x| field.pow(x, e as i64)).collect()).collect())
            .collect();
        Walker { field, powers, nvars }
    }

    fn values(&self, d: Domain) -> core::ops::Range<u32> {
        match d {
            Domain::Zero => 0..1,
            Domain::One => 1..2,
            Domain::Fixed(x) => x..x + 1,
            Domain::All => self.field.elements(),
            Domain::NonZero => 1..self.field.q(),
        }
    }

    /// Visits the monomial values at every point of the product of
    /// `domains`; the visitor returns `false` to stop early.
    fn walk(&self, domains: &[Domain], leaf: &mut impl FnMut(&[u32]) -> bool) -> bool {
        let start = vec![1u32; self.powers.len()];
        self.step(domains, 0, &start, leaf)
    }

    fn step(&self, domains: &[Domain], j: usize, partial: &[u32], leaf: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if j == self.nvars {
            return leaf(partial);
        }
        let mut next = vec![0u32; partial.len()];
        for x in self.values(domains[j]) {
            for (t, slot) in next.iter_mut().enumerate() {
                *slot = self.field.mul(partial[t], self.powers[t][j][x as usize]);
            }
            if !self.step(domains, j + 1, &next, leaf) {
                return false;
            }
        }
        true
    }
}

fn combine(field: &FieldSpec, coefs: &[u32], values: &[u32]) -> u32 {
    coefs.iter().zip(values).fold(0, |acc, (&c, &v)| field.add(acc, field.mul(c, v)))
}

/// Affine-cone counter, split by the value of the first coordinate so that
/// callers can distribute slices.
pub struct ConeCounter<'a> {
    walker: Walker<'a>,
    coefs: Vec<u32>,
}

impl<'a> ConeCounter<'a> {
    pub fn new(spec: &HypersurfaceSpec, field: &'a FieldSpec) -> Result<Self, PointCountError> {
        spec.check_characteristic(field)?;
        let terms: Vec<&Term> = spec.all_terms().collect();
        let coefs = terms.iter().map(|t| field.from_int(t.coefficient)).collect();
        Ok(ConeCounter { walker: Walker::new(field, &terms, spec.nvars()), coefs })
    }

    /// Zeros of the affine cone with `x_0 = x0`.
    pub fn slice(&self, x0: u32) -> u64 {
        let mut domains = vec![Domain::All; self.walker.nvars];
        domains[0] = Domain::Fixed(x0);
        let mut count = 0;
        self.walker.walk(&domains, &mut |v| {
            if combine(self.walker.field, &self.coefs, v) == 0 {
                count += 1;
            }
            true
        });
        count
    }

    pub fn first_coordinates(&self) -> core::ops::Range<u32> {
        self.walker.field.elements()
    }

    /// `(N_cone - 1) / (q - 1)`, checked to be exact.
    pub fn finish(&self, cone: u64) -> Result<u64, PointCountError> {
        points_from_cone(cone, self.walker.field.q() as u64)
    }
}

pub fn points_from_cone(cone: u64, q: u64) -> Result<u64, PointCountError> {
    let order = q - 1;
    if cone == 0 || !(cone - 1).is_multiple_of(order) {
        return Err(PointCountError::InexactQuotient { cone, order });
    }
    Ok((cone - 1) / order)
}

/// Number of `F_q`-points of the coarse weighted projective hypersurface.
pub fn count_points(spec: &HypersurfaceSpec, field: &FieldSpec) -> Result<u64, PointCountError> {
    let counter = ConeCounter::new(spec, field)?;
    let cone = counter.first_coordinates().map(|x0| counter.slice(x0)).sum();
    counter.finish(cone)
}

/// Whether `f = 0, x_i df/dx_i = 0` has no projective solution over any
/// `F_{q^j}`, `j <= max_ext`. Only these finitely many fields are searched.
pub fn is_general_position(spec: &HypersurfaceSpec, field: &FieldSpec, max_ext: u32) -> Result<bool, PointCountError> {
    let terms: Vec<&Term> = spec.all_terms().collect();
    let nv = spec.nvars();
    let equal_weights = spec.weights.iter().all(|&w| w == spec.weights[0]);
    for j in 1..=max_ext {
        let ext = FieldSpec::new(field.p() as u64, field.k() * j)?;
        let walker = Walker::new(&ext, &terms, nv);
        let mut rows = vec![terms.iter().map(|t| ext.from_int(t.coefficient)).collect::<Vec<u32>>()];
        for i in 0..nv {
            rows.push(terms.iter().map(|t| ext.from_int(t.coefficient * t.exponents[i] as i64)).collect());
        }
        let mut leaf = |v: &[u32]| !rows.iter().all(|r| combine(&ext, r, v) == 0);
        // Zero polynomial: every point is a solution.
        let starts: Vec<Vec<Domain>> = if equal_weights {
            (0..nv)
                .map(|lead| {
                    (0..nv)
                        .map(|i| match i.cmp(&lead) {
                            core::cmp::Ordering::Less => Domain::Zero,
                            core::cmp::Ordering::Equal => Domain::One,
                            core::cmp::Ordering::Greater => Domain::All,
                        })
                        .collect()
                })
                .collect()
        } else {
            (0..nv)
                .map(|lead| {
                    (0..nv)
                        .map(|i| match i.cmp(&lead) {
                            core::cmp::Ordering::Less => Domain::Zero,
                            core::cmp::Ordering::Equal => Domain::NonZero,
                            core::cmp::Ordering::Greater => Domain::All,
                        })
                        .collect()
                })
                .collect()
        };
        for domains in &starts {
            if !walker.walk(domains, &mut leaf) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Value of the polynomial at one point.
pub fn evaluate(spec: &HypersurfaceSpec, field: &FieldSpec, point: &[u32]) -> u32 {
    spec.all_terms().fold(0, |acc, t| {
        let m = t
            .exponents
            .iter()
            .zip(point)
            .fold(field.from_int(t.coefficient), |m, (&e, &x)| field.mul(m, field.pow(x, e as i64)));
        field.add(acc, m)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub containment: bool,
    /// Torus points of `Y_lambda` whose image is off `X_lambda`.
    pub violations: u64,
    pub torus_points: u64,
    /// Fiber size -> number of image points with that many torus preimages.
    pub fiber_histogram: BTreeMap<u64, u64>,
}

/// Pushes every `F_q`-point of `Y_lambda` with nonzero coordinates through
/// `x_j = prod_i y_i^{B_ji}` and checks that it lands on `X_lambda`.
pub fn verify_cover_map(
    data: &DeformationData,
    lambda: i64,
    field: &FieldSpec,
) -> Result<CoverReport, PointCountError> {
    let cover = HypersurfaceSpec::fermat_cover(data, lambda);
    let target = HypersurfaceSpec::delsarte(data, lambda);
    cover.check_characteristic(field)?;
    let map = data.map_rows();
    let weights = data.weights();
    let nv = data.len();
    let cover_terms: Vec<&Term> = cover.all_terms().collect();
    let coefs: Vec<u32> = cover_terms.iter().map(|t| field.from_int(t.coefficient)).collect();
    let walker = Walker::new(field, &cover_terms, nv);

    let mut images: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut violations = 0;
    let mut torus_points = 0;
    let mut domains = vec![Domain::NonZero; nv];
    domains[0] = Domain::One;
    let mut y = vec![0u32; nv];
    let mut leaf_index = 0u64;
    let q1 = field.order() as u64;
    walker.walk(&domains, &mut |v| {
        // recover the point from the walk order: y_0 = 1, the rest in base q - 1
        let mut r = leaf_index;
        for j in (1..nv).rev() {
            y[j] = 1 + (r % q1) as u32;
            r /= q1;
        }
        y[0] = 1;
        leaf_index += 1;
        if combine(field, &coefs, v) != 0 {
            return true;
        }
        torus_points += 1;
        let x: Vec<u32> =
            (0..nv).map(|j| (0..nv).fold(1, |acc, i| field.mul(acc, field.pow(y[i], map[j][i])))).collect();
        if evaluate(&target, field, &x) != 0 {
            violations += 1;
        }
        *images.entry(canonical_weighted(field, weights, &x)).or_insert(0) += 1;
        true
    });
    let mut fiber_histogram = BTreeMap::new();
    for size in images.values() {
        *fiber_histogram.entry(*size).or_insert(0) += 1;
    }
    Ok(CoverReport { containment: violations == 0, violations, torus_points, fiber_histogram })
}

/// Least representative of `x` under `x_j -> mu^{w_j} x_j`.
fn canonical_weighted(field: &FieldSpec, weights: &[u64], x: &[u32]) -> Vec<u32> {
    (1..field.q())
        .map(|mu| x.iter().zip(weights).map(|(&xj, &w)| field.mul(field.pow(mu, w as i64), xj)).collect::<Vec<_>>())
        .min()
        .expect("field has a nonzero element")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::builtin;

    fn fam(i: usize) -> DeformationData {
        builtin(&alloc::format!("family{i}")).unwrap().data().unwrap()
    }

    /// Independent count: projective representatives with leading 1.
    fn naive_projective(d: u32, n: usize, p: u32) -> u64 {
        let mut count = 0;
        let pw = |x: u32| (0..d).fold(1u64, |a, _| a * x as u64 % p as u64);
        for lead in 0..=n {
            let free = n - lead;
            for code in 0..(p as u64).pow(free as u32) {
                let mut s = 1u64;
                let mut c = code;
                for _ in 0..free {
                    s += pw((c % p as u64) as u32);
                    c /= p as u64;
                }
                if s.is_multiple_of(p as u64) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn projective_space_count() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(count_points(&HypersurfaceSpec::projective_space(3), &f).unwrap(), 156);
    }

    #[test]
    fn fermat_against_naive() {
        for (d, n, p) in [(4, 3, 5), (3, 2, 7), (4, 3, 13), (2, 2, 3)] {
            let f = FieldSpec::new(p, 1).unwrap();
            assert_eq!(
                count_points(&HypersurfaceSpec::fermat(d, n), &f).unwrap(),
                naive_projective(d, n, p as u32),
                "d={d} n={n} p={p}"
            );
        }
    }

    #[test]
    fn weighted_family2_matches_quartic() {
        // x0^4 + x1^4 + x2^3 x3 + x2 x3^3 in P(2,2,2,2) and as a quartic in P^3
        let f = FieldSpec::new(13, 1).unwrap();
        let weighted = HypersurfaceSpec::delsarte(&fam(2), 0);
        let plain = HypersurfaceSpec::new(
            vec![1; 4],
            vec![
                Term::new(vec![4, 0, 0, 0], 1),
                Term::new(vec![0, 4, 0, 0], 1),
                Term::new(vec![0, 0, 3, 1], 1),
                Term::new(vec![0, 0, 1, 3], 1),
            ],
            None,
        )
        .unwrap();
        assert_eq!(count_points(&weighted, &f).unwrap(), count_points(&plain, &f).unwrap());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let err = HypersurfaceSpec::new(vec![1, 1], vec![Term::new(vec![2, 0], 1), Term::new(vec![1, 0], 1)], None);
        assert!(matches!(err, Err(PointCountError::Inhomogeneous { index: 1, .. })));
        let f = FieldSpec::new(2, 1).unwrap();
        assert!(matches!(
            count_points(&HypersurfaceSpec::fermat(4, 3), &f),
            Err(PointCountError::CharacteristicDividesDegree { .. })
        ));
    }

    #[test]
    fn general_position() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert!(is_general_position(&HypersurfaceSpec::fermat(4, 3), &f5, 2).unwrap());
        let deg = HypersurfaceSpec::new(vec![1; 4], vec![Term::new(vec![4, 0, 0, 0], 1)], None).unwrap();
        assert!(!is_general_position(&deg, &f5, 1).unwrap());
        // scanning lambda for the quartic cover of family 1 finds a singular member
        let base = HypersurfaceSpec::fermat_cover(&fam(1), 0);
        let singular: Vec<i64> =
            (0..5).filter(|&l| !is_general_position(&base.with_lambda(l), &f5, 1).unwrap()).collect();
        assert!(!singular.is_empty());
        assert!(!singular.contains(&0));
    }

    #[test]
    fn cover_map_containment() {
        let r = verify_cover_map(&fam(1), 3, &FieldSpec::new(5, 1).unwrap()).unwrap();
        assert!(r.containment);
        assert_eq!(r.fiber_histogram.keys().copied().collect::<Vec<_>>(), vec![1]);
        let r = verify_cover_map(&fam(2), 1, &FieldSpec::new(17, 1).unwrap()).unwrap();
        assert!(r.containment && r.torus_points > 0);
        let r = verify_cover_map(&fam(6), 2, &FieldSpec::new(13, 1).unwrap()).unwrap();
        assert!(r.containment && r.torus_points > 0);
    }

    #[test]
    fn evaluation() {
        let f = FieldSpec::new(7, 1).unwrap();
        let s = HypersurfaceSpec::fermat(3, 2);
        assert_eq!(evaluate(&s, &f, &[1, 2, 3]), (1 + 8 + 27) % 7);
    }
}
