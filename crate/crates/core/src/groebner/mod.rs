//! Gröbner bases and the ideal operations built on them.

pub(crate) mod engine;
pub mod ideal;
pub mod module;
pub mod ops;

pub use ideal::{GroebnerBasis, Ideal};
pub use module::{mingens_columns, syzygies, ModuleGroebner};
pub use ops::{
    codim, dimension_and_degree, eliminate, graded_piece_dim, intersect, intersect_pair,
    last_variable_regular, quotient, quotient_element, quotient_piece_dim, ring_map_kernel,
    saturate, saturate_variable,
};
