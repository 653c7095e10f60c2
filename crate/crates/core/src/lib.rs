//! Certified bounds on the coindex of spaces of (almost-)embeddings of
//! simplicial complexes.
//!
//! Upper bounds come from a proper coloring of the Kneser graph of minimal
//! nonfaces together with a binary-expansion condition; lower bounds come
//! from explicit nonsingular bilinear maps with exact rational coefficients.

pub mod arith;
pub mod bilinear;
pub mod bounds;
pub mod error;
pub mod kneser;
mod linalg;
pub mod named;
pub mod simplicial;

pub use error::{Error, Result};
pub use simplicial::{FVector, Face, SimplicialComplex};
