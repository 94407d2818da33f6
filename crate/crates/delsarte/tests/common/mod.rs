//! Reference data and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use delsarte_core::deformation::DeformationData;
use delsarte_core::families;
use delsarte_core::symbolic::{MultiPoly, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn family(i: usize) -> DeformationData {
    families::builtin(&format!("family{i}")).unwrap().data().unwrap()
}

/// `(i, d, b, PF, dimW, c)` for the ten families.
pub const TABLE: [(usize, u64, [u64; 4], usize, usize, usize); 10] = [
    (1, 4, [1, 1, 1, 1], 3, 18, 0),
    (2, 8, [2, 2, 2, 2], 3, 12, 6),
    (3, 8, [2, 2, 2, 2], 3, 10, 8),
    (4, 28, [7, 7, 7, 7], 3, 18, 0),
    (5, 80, [20, 20, 20, 20], 3, 16, 2),
    (6, 12, [3, 3, 4, 2], 6, 12, 3),
    (7, 24, [6, 6, 8, 4], 6, 8, 7),
    (8, 12, [4, 2, 4, 2], 4, 12, 5),
    (9, 36, [9, 12, 8, 7], 18, 0, 3),
    (10, 108, [36, 24, 28, 20], 18, 0, 3),
];

/// Invariant types per family; a trailing `*` marks the Picard-Fuchs ones.
/// Single-character entries use `A = 10`, `B = 11`.
pub const GENERATORS: [(usize, &[&str]); 5] = [
    (
        1,
        &[
            "1111*", "1133", "1223", "1232", "1313", "1322", "1331", "2123", "2132", "2222*", "2213", "2231", "2312",
            "2321", "3113", "3122", "3131", "3212", "3221", "3311", "3333*",
        ],
    ),
    (
        2,
        &[
            "2222*", "2266", "2437", "2473", "2644", "4237", "4273", "4444*", "4615", "4651", "6244", "6415", "6451",
            "6622", "6666*",
        ],
    ),
    (3, &["2222*", "2266", "1537", "1573", "5137", "5173", "4444*", "3715", "3751", "7315", "7351", "6622", "6666*"]),
    (
        6,
        &[
            "3342*", "338A*", "364B", "3687", "3948", "3984", "634B", "6387", "6684*", "6648*", "6945", "6981", "9348",
            "9384", "9645", "9681", "9942*", "998A*",
        ],
    ),
    (
        7,
        &[
            "6,6,8,4*",
            "6,6,16,20*",
            "3,15,8,22",
            "3,15,16,14",
            "15,3,8,22",
            "15,3,16,14",
            "12,12,16,8*",
            "12,12,8,16*",
            "9,21,8,10",
            "9,21,16,2",
            "21,9,8,10",
            "21,9,16,2",
            "18,18,8,4*",
            "18,18,16,20*",
        ],
    ),
];

/// Parses one entry into `(entries, marked)`.
pub fn parse_generator(s: &str) -> (Vec<u32>, bool) {
    let (body, pf) = match s.strip_suffix('*') {
        Some(b) => (b, true),
        None => (s, false),
    };
    let entries = if body.contains(',') {
        body.split(',').map(|x| x.parse().unwrap()).collect()
    } else {
        body.chars().map(|c| c.to_digit(16).unwrap()).collect()
    };
    (entries, pf)
}

/// Rows of `B` reduced mod `d`.
pub fn map_rows(data: &DeformationData) -> Vec<Vec<u64>> {
    let d = data.d() as i64;
    data.map_matrix()
        .to_i64_rows()
        .unwrap()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(d) as u64).collect())
        .collect()
}

/// Every `m B mod d` with `m` ranging over `[0, d)^n`.
pub fn image_by_enumeration(data: &DeformationData) -> BTreeSet<Vec<u32>> {
    let d = data.d();
    let rows = map_rows(data);
    let n = rows.len();
    let mut out = BTreeSet::new();
    let mut m = vec![0u64; n];
    loop {
        let k: Vec<u32> = (0..n).map(|j| ((0..n).map(|i| m[i] * rows[i][j]).sum::<u64>() % d) as u32).collect();
        out.insert(k);
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            m[i] += 1;
            if m[i] < d {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

/// The subgroup of `(Z/d)^n` spanned by the rows of `B`, by breadth-first
/// closure under adding a row.
pub fn image_by_closure(data: &DeformationData) -> BTreeSet<Vec<u32>> {
    let d = data.d();
    let rows = map_rows(data);
    let zero = vec![0u32; rows.len()];
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(k) = queue.pop_front() {
        for r in &rows {
            let next: Vec<u32> = k.iter().zip(r).map(|(&a, &b)| ((a as u64 + b) % d) as u32).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Reduces `y^(m-1) Omega / F^t`, `F = sum y_i^d`, by repeatedly writing
/// `y^e = G_i dF/dy_i` with `G_i = y^e / (d y_i^(d-1))` and replacing the
/// form by `(1/(t-1)) dG_i/dy_i / F^(t-1)`. Returns `None` for the zero class,
/// else the coefficient and the final type.
pub fn reduce_by_differentiation(m: &[u64], d: u32) -> Option<(BigRational, Vec<u32>)> {
    let names: Vec<String> = (0..m.len()).map(|i| format!("y{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = Ring::new(&refs);
    let mut t = m.iter().sum::<u64>() / d as u64;
    let mut p = MultiPoly::monomial(&ring, m.iter().map(|&x| x as u32 - 1).collect(), BigRational::one());
    loop {
        let (mono, _) = p.terms().next()?;
        let Some(i) = mono.0.iter().position(|&e| e + 1 >= d) else {
            break;
        };
        let mut div = vec![0; m.len()];
        div[i] = d - 1;
        let g = p.div_exact(&MultiPoly::monomial(&ring, div, BigRational::from_integer(BigInt::from(d)))).unwrap();
        let inv = BigRational::new(BigInt::one(), BigInt::from(t - 1));
        p = g.derivative(&names[i]).scale(&inv);
        t -= 1;
        if p.is_zero() {
            return None;
        }
    }
    let (mono, c) = p.terms().next().unwrap();
    let basis: Vec<u32> = mono.0.iter().map(|e| e + 1).collect();
    assert_eq!(basis.iter().map(|&x| x as u64).sum::<u64>(), t * d as u64);
    assert!(!c.is_zero());
    Some((c.clone(), basis))
}
