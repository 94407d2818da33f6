//! Seeded spot checks of the elimination steps against root counting over
//! a prime field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use delsarte_core::symbolic::appendix::{quotient_surface, tangency_conditions, to_rational, QPoly, INDICES};
use delsarte_core::symbolic::resultant;

pub const DEFAULT_SEED: u64 = 20_160_501;
const P: u64 = 101;

/// Value of `poly` at the named assignment modulo `p`; `None` when a
/// coefficient denominator vanishes.
pub fn eval_mod(poly: &QPoly, assignment: &[(&str, u64)], p: u64) -> Option<u64> {
    let ring = poly.ring();
    let values: Vec<u64> =
        ring.names().iter().map(|n| assignment.iter().find(|(m, _)| m == n).map_or(0, |(_, v)| v % p)).collect();
    let pb = BigInt::from(p);
    let mut acc = BigInt::zero();
    for (mono, c) in poly.terms() {
        let den = c.denom().mod_floor(&pb);
        if den.is_zero() {
            return None;
        }
        let den_inv = den.modpow(&BigInt::from(p - 2), &pb);
        let mut t = c.numer().mod_floor(&pb) * den_inv;
        for (e, v) in mono.0.iter().zip(&values) {
            if *e > 0 {
                t = t * BigInt::from(*v).modpow(&BigInt::from(*e), &pb) % &pb;
            }
        }
        acc = (acc + t) % &pb;
    }
    acc.to_u64()
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let lead = inv(*b.last().expect("nonzero divisor"), p);
    while a.len() >= b.len() {
        let c = a[a.len() - 1] * lead % p;
        let shift = a.len() - b.len();
        for (i, &x) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - c * x % p) % p;
        }
        a = trim(a);
    }
    a
}

/// Degree of `gcd(f, g)` over `F_p`, ascending coefficient vectors.
pub fn gcd_degree(f: &[u64], g: &[u64], p: u64) -> Option<usize> {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

#[derive(Debug, Clone)]
pub struct SpotCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A quadratic in `v` has exactly one root in `F_p` iff its discriminant
/// vanishes there.
pub fn discriminant_roots(seed: u64, samples: usize) -> SpotCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut tested, mut double, mut bad) = (0, 0, 0);
    for s in 0..samples {
        let i = INDICES[s % INDICES.len()];
        let surf = to_rational(&quotient_surface(i, 1).expect("family")).expect("rational");
        let point: Vec<(&str, u64)> = ["lambda", "u", "x2", "x3"].iter().map(|n| (*n, rng.gen_range(0..P))).collect();
        let [c, b, a] = [0, 1, 2].map(|k| eval_mod(&surf.coeff_in("v", k), &point, P).expect("integral"));
        if a == 0 {
            continue;
        }
        tested += 1;
        let disc = (b * b % P + P - 4 * a % P * c % P) % P;
        let roots = (0..P).filter(|v| (a * v % P * v + b * v + c).is_multiple_of(P)).count();
        if disc == 0 {
            double += 1;
        }
        if (roots == 1) != (disc == 0) {
            bad += 1;
        }
    }
    SpotCheck {
        name: "spot-discriminant".into(),
        passed: bad == 0 && tested > 0,
        detail: format!("{tested} points over F_{P}, {double} with a double root, {bad} disagreements"),
    }
}

/// The `a3`-resultant of the tangency conditions vanishes at a point iff
/// the specialized conditions share a factor over `F_p`.
pub fn resultant_gcd(seed: u64, samples: usize) -> SpotCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut tested = 0;
    let mut common = 0;
    let mut bad = 0;
    for i in INDICES {
        let (r3, r4) = tangency_conditions(i).expect("family");
        let res = resultant(&r3, &r4, "a3").expect("nonzero");
        let (c3, c4) = (r3.coefficients_in("a3"), r4.coefficients_in("a3"));
        for _ in 0..samples / INDICES.len() {
            let point = [("lambda", rng.gen_range(0..P)), ("a2", rng.gen_range(1..P))];
            let f: Vec<u64> = c3.iter().map(|c| eval_mod(c, &point, P).expect("integral")).collect();
            let g: Vec<u64> = c4.iter().map(|c| eval_mod(c, &point, P).expect("integral")).collect();
            if f.last() == Some(&0) || g.last() == Some(&0) {
                continue;
            }
            tested += 1;
            let shares = gcd_degree(&f, &g, P).is_some_and(|d| d > 0);
            let vanishes = eval_mod(&res, &point, P) == Some(0);
            common += shares as usize;
            bad += (shares != vanishes) as usize;
        }
    }
    SpotCheck {
        name: "spot-resultant".into(),
        passed: bad == 0 && tested > 0,
        detail: format!("{tested} points over F_{P}, {common} with a common root, {bad} disagreements"),
    }
}
