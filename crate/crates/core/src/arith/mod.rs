//! Prime fields, seeded randomness and univariate factorization over F_p.

pub mod field;
pub mod rng;
pub mod univariate;

pub use field::{PrimeField, DEFAULT_CHAR};
pub use rng::SeededRng;
pub use univariate::UnivariatePoly;
