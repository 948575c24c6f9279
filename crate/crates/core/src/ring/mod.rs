//! Sparse polynomials over F_p, monomial orders, graded free modules and
//! matrices over the polynomial ring.

pub mod matops;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod random;
#[allow(clippy::module_inception)]
pub mod ring;

pub use matops::{determinant, exterior_power, jacobian, minors, pfaffians, skew_matrix, subsets};
pub use module::{GradedFreeModule, GradedMatrix};
pub use monomial::{Monomial, MAX_EXP, MAX_VARS};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Term};
pub use random::{random_combination, random_form, random_matrix};
pub use ring::{binomial, binomial_poly_eval, MonomialOrder, Ring};
