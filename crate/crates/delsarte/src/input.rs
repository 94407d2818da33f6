//! Family references: a registry key such as `family3`, or a path to a
//! JSON document `{"matrix": [[..], ..], "deformation": [..]}`.

use std::path::Path;

use delsarte_core::deformation::{DeformationData, DeformationError};
use delsarte_core::exactalg::IntMatrix;
use delsarte_core::families;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyInput {
    pub matrix: Vec<Vec<i64>>,
    pub deformation: Vec<u64>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}: not a registry key and not a readable file ({1})")]
    Unreadable(String, std::io::Error),
    #[error("{0}: malformed JSON: {1}")]
    Json(String, serde_json::Error),
    #[error("{0}: {1}")]
    Shape(String, delsarte_core::exactalg::MatrixError),
    #[error("{0}: {1}")]
    Invalid(String, DeformationError),
}

impl FamilyInput {
    pub fn build(&self, label: &str) -> Result<DeformationData, InputError> {
        let a = IntMatrix::from_rows(&self.matrix).map_err(|e| InputError::Shape(label.into(), e))?;
        DeformationData::build(&a, &self.deformation).map_err(|e| InputError::Invalid(label.into(), e))
    }
}

/// Resolves a family reference.
pub fn load_family(reference: &str) -> Result<DeformationData, InputError> {
    if let Some(f) = families::builtin(reference) {
        return f.data().map_err(|e| InputError::Invalid(reference.into(), e));
    }
    let text =
        std::fs::read_to_string(Path::new(reference)).map_err(|e| InputError::Unreadable(reference.into(), e))?;
    parse_family(reference, &text)
}

pub fn parse_family(label: &str, text: &str) -> Result<DeformationData, InputError> {
    let doc: FamilyInput = serde_json::from_str(text).map_err(|e| InputError::Json(label.into(), e))?;
    doc.build(label)
}
