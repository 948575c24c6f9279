//! Randomized construction and certification of algebraic curves over prime
//! fields: Gröbner bases, free resolutions, Betti tables and the curve
//! pipelines built on them.

pub mod arith;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod homology;
pub mod ring;

pub use error::{Error, Result};
