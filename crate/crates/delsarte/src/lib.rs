//! File formats, parallel drivers and the command implementations behind
//! the `delsarte` binary.

pub mod commands;
pub mod input;
pub mod parallel;
pub mod report;
pub mod spotcheck;

pub use input::{load_family, FamilyInput, InputError};
pub use report::{Failure, Outcome};

/// Field-size bound from `DELSARTE_MAX_Q`, falling back to `2^20`.
pub fn max_q() -> u64 {
    std::env::var("DELSARTE_MAX_Q")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(delsarte_core::field::DEFAULT_MAX_Q)
}
