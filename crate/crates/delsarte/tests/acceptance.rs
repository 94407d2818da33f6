//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines always show up in `cargo test` output.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::{family, image_by_closure, image_by_enumeration, parse_generator, reduce_by_differentiation};
use delsarte::commands;
use delsarte::spotcheck::DEFAULT_SEED;
use delsarte_core::cyclotomic::units;
use delsarte_core::field::FieldSpec;
use delsarte_core::monomials::{
    enumerate_basis, g_invariant_types, gmax_invariant_types, is_g_invariant, reduce_form, strong_classes,
    weak_classes, MonomialType, ReducedForm,
};
use delsarte_core::pointcount::{count_points, HypersurfaceSpec};
use delsarte_core::zetafermat::{
    char_poly_invariant, fermat_point_count_via_sums, intersect, jacobi_eigenvalue, lifted_invariant_sets,
    multiplicative_character, verify_common_factor,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WEIL_RELATIVE_TOLERANCE: f64 = 1e-6;
const JACOBI_GRID: [(u32, usize, u64); 5] = [(4, 3, 5), (4, 3, 13), (3, 2, 7), (8, 3, 17), (12, 3, 13)];
const RANDOM_TYPES: usize = 1000;
const REDUCTION_SAMPLES: usize = 50;

/// Criteria that fail when read literally; see the detail line.
const EXPECTED_RED: [u32; 1] = [9];

type Verdict = Result<String, String>;
type Criterion = (u32, Duration, fn() -> Verdict);

fn within(limit: Duration, start: Instant, v: Verdict) -> Verdict {
    let took = start.elapsed();
    match v {
        Ok(s) if took <= limit => Ok(format!("{s} [{took:.2?} <= {limit:?}]")),
        Ok(s) => Err(format!("{s} but took {took:.2?} > {limit:?}")),
        Err(s) => Err(format!("{s} [{took:.2?}]")),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table() -> Verdict {
    let out = commands::table10(None, &[]);
    ensure(out.ok(), || format!("{} failed rows", out.failures.len()))?;
    let rows: Vec<&str> = out.out.lines().skip(1).collect();
    ensure(rows.len() == 10, || format!("{} rows", rows.len()))?;
    for (row, &(i, d, b, pf, w, c)) in rows.iter().zip(&common::TABLE) {
        let cells: Vec<&str> = row.split('\t').collect();
        let expected =
            [i.to_string(), d.to_string(), commands::tuple(&b), pf.to_string(), w.to_string(), c.to_string()];
        let got = [cells[0], cells[2], cells[3], cells[4], cells[5], cells[6]];
        ensure(got.iter().zip(&expected).all(|(g, e)| g == e), || format!("row {i}: {got:?} != {expected:?}"))?;
    }
    Ok("10 rows match".into())
}

fn generators() -> Verdict {
    for (i, column) in common::GENERATORS {
        let data = family(i);
        let got: BTreeSet<Vec<u32>> = g_invariant_types(&data).iter().map(|k| k.entries().to_vec()).collect();
        let got_pf: BTreeSet<Vec<u32>> = gmax_invariant_types(&data).iter().map(|k| k.entries().to_vec()).collect();
        let parsed: Vec<(Vec<u32>, bool)> = column.iter().map(|s| parse_generator(s)).collect();
        let want: BTreeSet<Vec<u32>> = parsed.iter().map(|(k, _)| k.clone()).collect();
        let want_pf: BTreeSet<Vec<u32>> = parsed.iter().filter(|(_, pf)| *pf).map(|(k, _)| k.clone()).collect();
        ensure(got == want, || format!("family {i}: type sets differ"))?;
        ensure(got_pf == want_pf, || format!("family {i}: PF subsets differ"))?;
    }
    Ok("families 1, 2, 3, 6, 7 and their PF subsets match".into())
}

fn common_degrees() -> Verdict {
    let mut parts = Vec::new();
    for (members, d, want) in [(&[1, 2, 3][..], 8, 5), (&[1, 2][..], 8, 7), (&[6, 7][..], 24, 6)] {
        let data: Vec<_> = members.iter().map(|&i| family(i)).collect();
        let n = intersect(&lifted_invariant_sets(&data, d).map_err(|e| e.to_string())?).len();
        ensure(n == want, || format!("{members:?}: degree {n}, expected {want}"))?;
        parts.push(format!("{members:?} -> {n}"));
    }
    Ok(parts.join(", "))
}

fn divisibility() -> Verdict {
    let mut parts = Vec::new();
    for (members, q, want) in [(&[1, 2, 3][..], 17, 5), (&[1, 2][..], 17, 7), (&[6, 7][..], 73, 6)] {
        let data: Vec<_> = members.iter().map(|&i| family(i)).collect();
        let field = FieldSpec::new(q, 1).map_err(|e| e.to_string())?;
        let r = verify_common_factor(&data, &field).map_err(|e| e.to_string())?;
        ensure(r.common_degree == want, || format!("{members:?}: degree {}", r.common_degree))?;
        ensure(r.families.iter().all(|f| f.divides), || format!("{members:?}: a family factor is not divisible"))?;
        parts.push(format!("{members:?} at q={q}"));
    }
    Ok(format!("exact division for {}", parts.join(", ")))
}

fn jacobi_counts() -> Verdict {
    for (d, n, q) in JACOBI_GRID {
        let field = FieldSpec::new(q, 1).map_err(|e| e.to_string())?;
        let sums = fermat_point_count_via_sums(d, n, &field).map_err(|e| e.to_string())?;
        let brute = count_points(&HypersurfaceSpec::fermat(d, n), &field).map_err(|e| e.to_string())?;
        ensure(sums == BigInt::from(brute), || format!("(d,n,q)=({d},{n},{q}): {sums} vs {brute}"))?;
    }
    Ok(format!("{} grid points agree", JACOBI_GRID.len()))
}

fn weil() -> Verdict {
    let mut checked = 0;
    let mut worst = 0f64;
    for (d, n, q) in JACOBI_GRID {
        let field = FieldSpec::new(q, 1).map_err(|e| e.to_string())?;
        let table = multiplicative_character(&field, d).map_err(|e| e.to_string())?;
        let target = (q as f64).powf((n as f64 - 1.0) / 2.0);
        for k in enumerate_basis(d, n, false) {
            let alpha = jacobi_eigenvalue(&k, &field, &table).map_err(|e| e.to_string())?;
            for s in units(d) {
                let rel = (alpha.abs(s) - target).abs() / target;
                worst = worst.max(rel);
                checked += 1;
            }
        }
    }
    ensure(worst <= WEIL_RELATIVE_TOLERANCE, || format!("relative error {worst:e} > {WEIL_RELATIVE_TOLERANCE:e}"))?;
    Ok(format!("{checked} embeddings, worst relative error {worst:.1e}"))
}

fn rationality() -> Verdict {
    // (field size, degree, type set): every Galois orbit on the grid, then
    // the invariant sets of two family groups and their intersections
    let mut sets: Vec<(u64, u32, Vec<MonomialType>)> = Vec::new();
    for (d, n, q) in JACOBI_GRID {
        let mut seen = BTreeSet::new();
        for k in enumerate_basis(d, n, false) {
            if seen.contains(&k) {
                continue;
            }
            let orbit: BTreeSet<MonomialType> = units(d).into_iter().map(|u| k.scale(u as u64)).collect();
            seen.extend(orbit.iter().cloned());
            sets.push((q, d, orbit.into_iter().collect()));
        }
    }
    for (members, d, q) in [(&[1, 2, 3][..], 8, 17), (&[6, 7][..], 24, 73)] {
        let data: Vec<_> = members.iter().map(|&i| family(i)).collect();
        let lifted = lifted_invariant_sets(&data, d).map_err(|e| e.to_string())?;
        sets.push((q, d as u32, intersect(&lifted)));
        sets.extend(lifted.into_iter().map(|s| (q, d as u32, s)));
    }
    for (q, d, types) in &sets {
        let field = FieldSpec::new(*q, 1).map_err(|e| e.to_string())?;
        let order = q - 1;
        let u = (2..order).find(|u| num_integer::gcd(*u, order) == 1).unwrap_or(1);
        let other = field.rebased(u).map_err(|e| e.to_string())?;
        let a = char_poly_invariant(types, &field, &multiplicative_character(&field, *d).map_err(|e| e.to_string())?)
            .map_err(|e| format!("q={q} d={d}: {e}"))?;
        let b = char_poly_invariant(types, &other, &multiplicative_character(&other, *d).map_err(|e| e.to_string())?)
            .map_err(|e| format!("q={q} d={d}: {e}"))?;
        ensure(a == b, || format!("q={q} d={d}: generator changes the polynomial"))?;
    }
    Ok(format!("{} Galois-stable sets give integer polynomials, equal under two generators", sets.len()))
}

fn rotate(k: &MonomialType) -> Vec<u32> {
    let e = k.entries();
    vec![e[0], e[3], e[1], e[2]]
}

fn classes() -> Verdict {
    let data = family(4);
    let d = data.d() as u32;
    let strong = strong_classes(&g_invariant_types(&data), data.cover_exponents(), d);
    let sizes: Vec<usize> = strong.iter().map(Vec::len).collect();
    ensure(sizes == vec![3; 7], || format!("family 4 strong sizes {sizes:?}"))?;
    let as_sets: Vec<BTreeSet<Vec<u32>>> =
        strong.iter().map(|c| c.iter().map(|k| k.entries().to_vec()).collect()).collect();
    for listed in [
        [[7, 7, 7, 7], [14, 14, 14, 14], [21, 21, 21, 21]],
        [[7, 11, 23, 15], [14, 18, 2, 22], [21, 25, 9, 1]],
        [[7, 3, 19, 27], [14, 10, 26, 6], [21, 17, 5, 13]],
    ] {
        let want: BTreeSet<Vec<u32>> = listed.iter().map(|k| k.to_vec()).collect();
        ensure(as_sets.contains(&want), || format!("family 4: class {listed:?} missing"))?;
    }
    // orbits of the classes under x1 -> x2 -> x3 -> x1
    let image: Vec<usize> = strong
        .iter()
        .map(|c| {
            let moved: BTreeSet<Vec<u32>> = c.iter().map(rotate).collect();
            as_sets.iter().position(|s| *s == moved).ok_or(())
        })
        .collect::<Result<_, _>>()
        .map_err(|_| "family 4: rotation does not permute the classes".to_string())?;
    let mut orbit_sizes = BTreeMap::new();
    let mut seen = vec![false; image.len()];
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = image[i];
            len += 1;
        }
        *orbit_sizes.entry(len).or_insert(0) += 1;
    }
    ensure(orbit_sizes == BTreeMap::from([(1, 1), (3, 2)]), || format!("family 4 orbits {orbit_sizes:?}"))?;

    let data = family(5);
    let weak = weak_classes(&g_invariant_types(&data), data.cover_exponents(), data.d() as u32);
    let sizes: BTreeSet<usize> = weak.iter().map(Vec::len).collect();
    ensure(weak.len() == 2 && sizes == BTreeSet::from([3, 16]), || format!("family 5 weak sizes {sizes:?}"))?;
    let large = weak.iter().find(|c| c.len() == 16).unwrap();
    let large: BTreeSet<Vec<u32>> = large.iter().map(|k| k.entries().to_vec()).collect();
    // the listed types use the opposite cyclic orientation, so swap x1 and x3
    for [a, b, c, e] in [[4, 52, 36, 68], [24, 72, 56, 8], [44, 12, 76, 28], [64, 32, 16, 48]] {
        let k = vec![a, e, c, b];
        ensure(large.contains(&k), || format!("family 5: {k:?} not in the large class"))?;
    }
    let strong = strong_classes(&g_invariant_types(&data), data.cover_exponents(), data.d() as u32);
    let mut sizes: Vec<usize> = strong.iter().map(Vec::len).collect();
    sizes.sort();
    ensure(sizes == [3, 4, 4, 4, 4], || format!("family 5 strong sizes {sizes:?}"))?;
    Ok("family 4: 7 classes of 3, orbits 1 + 3 + 3; family 5 weak: 3 + 16, strong: 3 + 4 x 4".into())
}

fn appendix() -> Verdict {
    let out = commands::verify_appendix(None, DEFAULT_SEED);
    let lines: Vec<&str> = out.out.lines().collect();
    ensure(out.ok(), || format!("{} checks fail even under the corrected reading", out.failures.len()))?;
    let errata: Vec<&str> =
        lines.iter().filter(|l| l.split('\t').nth(2) == Some("erratum")).filter_map(|l| l.split('\t').nth(1)).collect();
    ensure(errata.is_empty(), || {
        format!(
            "printed text fails {} items ({}); all {} checks pass with the corrections",
            errata.len(),
            errata.join(", "),
            lines.len()
        )
    })?;
    Ok(format!("{} checks pass as printed", lines.len()))
}

fn invariance_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut full = 0;
    let mut sampled = 0;
    for i in 1..=10 {
        let data = family(i);
        let d = data.d() as u32;
        if d <= 36 {
            let image = image_by_enumeration(&data);
            for k in enumerate_basis(d, 3, false) {
                ensure(is_g_invariant(&k, &data) == image.contains(k.entries()), || format!("family {i}: ({k})"))?;
                full += 1;
            }
        } else {
            let image = image_by_closure(&data);
            let mut drawn = 0;
            while drawn < RANDOM_TYPES {
                let mut e: Vec<i64> = (0..3).map(|_| rng.gen_range(1..d as i64)).collect();
                e.push((-e.iter().sum::<i64>()).rem_euclid(d as i64));
                let k = MonomialType::new(d, &e).map_err(|e| e.to_string())?;
                if !k.is_interior() {
                    continue;
                }
                drawn += 1;
                ensure(is_g_invariant(&k, &data) == image.contains(k.entries()), || format!("family {i}: ({k})"))?;
                sampled += 1;
            }
        }
    }
    Ok(format!("{full} types against full enumeration, {sampled} random types at d = 80, 108"))
}

fn reduction_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut zeros = 0;
    for s in 0..REDUCTION_SAMPLES {
        let d = [3u32, 4, 5][s % 3];
        let dd = d as u64;
        // every fifth sample has an entry divisible by d, the others none
        let want_zero = s % 5 == 0;
        let m = loop {
            let mut m: Vec<u64> = (0..3).map(|_| rng.gen_range(1..=3 * dd)).collect();
            let rest = (dd - m.iter().sum::<u64>() % dd) % dd;
            m.push(rest + dd * rng.gen_range(0..=1));
            if m[3] > 0 && m.iter().any(|x| x % dd == 0) == want_zero {
                break m;
            }
        };
        let ours = reduce_form(&m, d).map_err(|e| format!("{m:?}: {e}"))?;
        let oracle = reduce_by_differentiation(&m, d);
        let agree = match (&ours, &oracle) {
            (ReducedForm::Zero, None) => {
                zeros += 1;
                true
            }
            (ReducedForm::Form { coefficient, basis }, Some((c, b))) => coefficient == c && basis.entries() == &b[..],
            _ => false,
        };
        ensure(agree, || format!("m={m:?} d={d}: {ours:?} vs {oracle:?}"))?;
    }
    ensure(zeros > 0, || "no zero-class sample drawn".into())?;
    Ok(format!("{REDUCTION_SAMPLES} vectors agree, {zeros} zero classes"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, Duration::from_secs(5), table),
        (2, Duration::from_secs(1), generators),
        (3, Duration::from_secs(5), common_degrees),
        (4, Duration::from_secs(30), divisibility),
        (5, Duration::from_secs(120), jacobi_counts),
        (6, Duration::from_secs(120), weil),
        (7, Duration::from_secs(120), rationality),
        (8, Duration::from_secs(5), classes),
        (9, Duration::from_secs(60), appendix),
        (10, Duration::from_secs(120), invariance_oracle),
        (11, Duration::from_secs(30), reduction_oracle),
    ];
    let mut red = Vec::new();
    for (n, limit, run) in criteria {
        let start = Instant::now();
        match within(limit, start, run()) {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail}"),
            Err(detail) => {
                println!("criterion {n:>2}: FAIL  {detail}");
                red.push(n);
            }
        }
    }
    if red != EXPECTED_RED {
        eprintln!("failing criteria {red:?}, expected exactly {EXPECTED_RED:?}");
        std::process::exit(1);
    }
}
