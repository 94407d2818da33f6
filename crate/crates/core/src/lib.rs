//! Exact arithmetic for Delsarte quartic families: cover data, monomial
//! types, point counts, Jacobi-sum zeta factors and the polynomial algebra
//! behind the bitangent computations.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cyclotomic;
pub mod deformation;
pub mod exactalg;
pub mod families;
pub mod field;
pub mod monomials;
pub mod pointcount;
pub mod symbolic;
pub mod zetafermat;
