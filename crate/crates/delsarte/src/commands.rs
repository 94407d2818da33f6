use std::fmt::Display;

use delsarte_core::deformation::DeformationData;
use delsarte_core::families::{self, monomial_sum_text};
use delsarte_core::field::{prime_power, FieldSpec};
use delsarte_core::monomials::{
    dimension_triple, g_invariant_types, gmax_invariant_types, strong_classes, weak_classes, MonomialType,
};
use delsarte_core::pointcount::{is_general_position, HypersurfaceSpec};
use delsarte_core::symbolic::appendix::{self, bitangent_eliminant, INDICES};
use thiserror::Error;

use crate::input::{load_family, InputError};
use crate::parallel;
use crate::report::Outcome;
use crate::spotcheck;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Field(#[from] delsarte_core::field::FieldError),
    #[error(transparent)]
    Count(#[from] delsarte_core::pointcount::PointCountError),
    #[error(transparent)]
    Zeta(#[from] delsarte_core::zetafermat::ZetaError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    G,
    Gmax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Strong,
    Weak,
}

pub fn tuple<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// `d, b, PF, dimW, c` as tab-separated cells.
fn row_cells(data: &DeformationData) -> String {
    let pf = gmax_invariant_types(data).len();
    match dimension_triple(data) {
        Ok(t) => format!("{}\t{}\t{}\t{}\t{}", data.d(), tuple(data.cover_exponents()), t.pf, t.dim_w, t.c),
        Err(_) => format!("{}\t{}\t{}\t-\t-", data.d(), tuple(data.cover_exponents()), pf),
    }
}

pub fn analyze(reference: &str) -> Result<Outcome, CommandError> {
    let data = load_family(reference)?;
    let mut o = Outcome::default();
    o.line("d\tb\tPF\tdimW\tc");
    o.line(row_cells(&data));
    Ok(o)
}

pub const TABLE_HEADER: &str = "i\tF0\td\tb\tPF\tdimW\tc";

/// The ten registry families (or those in `only`), then any extra
/// references. Unusable extras become diagnostic rows and failures.
pub fn table10(only: Option<&[usize]>, extra: &[String]) -> Outcome {
    let mut o = Outcome::default();
    o.line(TABLE_HEADER);
    for f in families::all() {
        if only.is_some_and(|keep| !keep.contains(&f.index)) {
            continue;
        }
        match f.data() {
            Ok(data) => o.line(format!("{}\t{}\t{}", f.index, f.f0_text(), row_cells(&data))),
            Err(e) => {
                o.line(format!("{}\tERROR\t{e}", f.index));
                o.fail(f.key(), e.to_string());
            }
        }
    }
    for reference in extra {
        match load_family(reference) {
            Ok(data) => {
                let rows = data.coefficient_matrix().to_i64_rows().unwrap_or_default();
                let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&x| x as u32).collect()).collect();
                let f0 = monomial_sum_text(rows.iter().map(Vec::as_slice));
                o.line(format!("{reference}\t{f0}\t{}", row_cells(&data)));
            }
            Err(e) => {
                o.line(format!("{reference}\tERROR\t{e}"));
                o.fail(reference.clone(), e.to_string());
            }
        }
    }
    o
}

pub fn invariants(reference: &str, group: Group) -> Result<Outcome, CommandError> {
    let data = load_family(reference)?;
    let mut types = match group {
        Group::G => g_invariant_types(&data),
        Group::Gmax => gmax_invariant_types(&data),
    };
    types.sort();
    let pf: Vec<MonomialType> = gmax_invariant_types(&data);
    let mut o = Outcome::default();
    for k in &types {
        if group == Group::G && pf.contains(k) {
            o.line(format!("{k} (PF)"));
        } else {
            o.line(k.to_string());
        }
    }
    Ok(o)
}

pub fn classes(reference: &str, kind: ClassKind) -> Result<Outcome, CommandError> {
    let data = load_family(reference)?;
    let types = g_invariant_types(&data);
    let d = data.d() as u32;
    let parts = match kind {
        ClassKind::Strong => strong_classes(&types, data.cover_exponents(), d),
        ClassKind::Weak => weak_classes(&types, data.cover_exponents(), d),
    };
    let mut o = Outcome::default();
    for block in &parts {
        let items: Vec<String> = block.iter().map(|k| format!("({k})")).collect();
        o.line(format!("{}\t{}", block.len(), items.join(" ")));
    }
    Ok(o)
}

fn field_for(q: u64, ext: u32) -> Result<FieldSpec, CommandError> {
    let (p, k) = prime_power(q)?;
    Ok(FieldSpec::with_bound(p, k * ext.max(1), crate::max_q())?)
}

pub fn common_factor(references: &[String], q: u64, multiple: u64) -> Result<Outcome, CommandError> {
    if references.is_empty() {
        return Err(CommandError::Usage("common-factor needs at least one family".into()));
    }
    let data = references.iter().map(|r| load_family(r)).collect::<Result<Vec<_>, _>>()?;
    let field = field_for(q, 1)?;
    let report = parallel::common_factor(&data, &field, multiple)?;
    let mut o = Outcome::default();
    o.line(format!("d\t{}", report.d));
    o.line(format!("common_degree\t{}", report.common_degree));
    o.line(format!("common\t{}", report.common));
    for (r, f) in references.iter().zip(&report.families) {
        o.line(format!("{r}\tdegree\t{}\tdivides\t{}", f.degree, f.divides));
        if !f.divides {
            o.fail(format!("divides-{r}"), format!("common factor does not divide the degree {} factor", f.degree));
        }
    }
    Ok(o)
}

pub struct CountOptions {
    pub q: u64,
    pub lambda: u64,
    pub ext: u32,
    pub scan: bool,
    pub max_ext: u32,
}

pub fn count(reference: &str, opts: &CountOptions) -> Result<Outcome, CommandError> {
    let data = load_family(reference)?;
    let field = field_for(opts.q, opts.ext)?;
    let mut o = Outcome::default();
    if opts.scan {
        o.line("lambda\tpoints\tcover_general_position");
        for lambda in 0..field.p() as i64 {
            let points = parallel::count_points(&HypersurfaceSpec::delsarte(&data, lambda), &field)?;
            let gp = is_general_position(&HypersurfaceSpec::fermat_cover(&data, lambda), &field, opts.max_ext.max(1))?;
            o.line(format!("{lambda}\t{points}\t{gp}"));
        }
    } else {
        let spec = HypersurfaceSpec::delsarte(&data, opts.lambda as i64);
        let points = parallel::count_points(&spec, &field)?;
        o.line("q\tlambda\tpoints");
        o.line(format!("{}\t{}\t{points}", field.q(), opts.lambda % field.p() as u64));
    }
    Ok(o)
}

/// Golden eliminants, stored as text in the canonical print format.
pub const GOLDEN_ELIMINANTS: [(u32, &str); 5] = [
    (1, include_str!("../golden/eliminant-1.txt")),
    (2, include_str!("../golden/eliminant-2.txt")),
    (3, include_str!("../golden/eliminant-3.txt")),
    (6, include_str!("../golden/eliminant-6.txt")),
    (7, include_str!("../golden/eliminant-7.txt")),
];

fn selected(name: &str, only: Option<&[String]>) -> bool {
    only.is_none_or(|keep| keep.iter().any(|k| name.starts_with(k.as_str())))
}

fn record(o: &mut Outcome, name: &str, passed: bool, note: &str, detail: &str) {
    o.line(format!("{}\t{name}\t{note}\t{detail}", if passed { "PASS" } else { "FAIL" }));
    if !passed {
        o.fail(name, detail);
    }
}

/// The appendix checklist. `only` keeps checks whose name starts with one
/// of the given prefixes.
pub fn verify_appendix(only: Option<&[String]>, seed: u64) -> Outcome {
    let mut o = Outcome::default();
    for c in appendix::checks() {
        if selected(&c.name, only) {
            record(&mut o, &c.name, c.passed, if c.literal { "printed" } else { "erratum" }, &c.detail);
        }
    }
    for (i, text) in GOLDEN_ELIMINANTS {
        let name = format!("golden-eliminant-{i}");
        if !selected(&name, only) {
            continue;
        }
        let ok = match (appendix::ring().parse(text.trim()), bitangent_eliminant(i)) {
            (Ok(g), Ok(e)) => g == e,
            _ => false,
        };
        record(&mut o, &name, ok, "derived", "matches the stored eliminant");
    }
    debug_assert_eq!(GOLDEN_ELIMINANTS.map(|(i, _)| i), INDICES);
    for check in [spotcheck::discriminant_roots(seed, 200), spotcheck::resultant_gcd(seed, 200)] {
        if selected(&check.name, only) {
            record(&mut o, &check.name, check.passed, "derived", &check.detail);
        }
    }
    o
}
