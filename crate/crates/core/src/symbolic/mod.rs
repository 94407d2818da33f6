//! Exact polynomial algebra for the del Pezzo quotients of the quartic
//! families: branch quartics, their bitangents and the maps between the
//! different quotients.

pub mod appendix;
pub mod coeff;
pub mod elim;
pub mod parse;
pub mod poly;

pub use coeff::{Coeff, QZeta, Q8};
pub use elim::{discriminant_in, resultant, ElimError};
pub use parse::ParseError;
pub use poly::{Mono, MultiPoly, Ring};
