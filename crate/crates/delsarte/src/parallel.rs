//! Rayon drivers for the embarrassingly parallel loops: cone slices in
//! point counting and per-type Jacobi sums.

use rayon::prelude::*;

use delsarte_core::deformation::{common_cover, DeformationData};
use delsarte_core::field::FieldSpec;
use delsarte_core::monomials::MonomialType;
use delsarte_core::pointcount::{ConeCounter, HypersurfaceSpec, PointCountError};
use delsarte_core::zetafermat::{
    char_poly_from_eigenvalues, check_galois_stable, intersect, jacobi_eigenvalue, lifted_invariant_sets,
    multiplicative_character, CharPoly, CharacterTable, CommonFactorReport, FamilyFactor, ZetaError,
};

pub fn count_points(spec: &HypersurfaceSpec, field: &FieldSpec) -> Result<u64, PointCountError> {
    let counter = ConeCounter::new(spec, field)?;
    let cone: u64 = counter.first_coordinates().into_par_iter().map(|x0| counter.slice(x0)).sum();
    counter.finish(cone)
}

pub fn char_poly_invariant(
    types: &[MonomialType],
    field: &FieldSpec,
    table: &CharacterTable,
) -> Result<CharPoly, ZetaError> {
    check_galois_stable(types)?;
    let mut sorted = types.to_vec();
    sorted.sort();
    sorted.dedup();
    let eig = sorted.par_iter().map(|k| jacobi_eigenvalue(k, field, table)).collect::<Result<Vec<_>, _>>()?;
    char_poly_from_eigenvalues(table.d(), &eig)
}

/// Common-factor check at the joint cover degree times `multiple`.
pub fn common_factor(
    data: &[DeformationData],
    field: &FieldSpec,
    multiple: u64,
) -> Result<CommonFactorReport, ZetaError> {
    let cover = common_cover(data).ok_or(ZetaError::NoCommonCover)?.scaled(multiple.max(1));
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
