//! Free resolutions, Betti tables and Hilbert series.

pub mod betti;
pub mod ext;
pub mod hilbert;
pub mod resolution;
pub mod tables;

pub use betti::{same_layout, BettiTable};
pub use ext::{ext1_dual_presentation, ext_dual_presentation, petri_injective_certificate};
pub use hilbert::{
    genus, hilbert_numerator, hilbert_polynomial, monomial_hilbert_numerator, HilbertNumerator,
    HilbertPolynomial,
};
pub use resolution::{prune, resolve_cokernel, resolve_ideal, FreeResolution};
pub use tables::{
    expected_natural_betti, is_natural, koszul_betti, liaison_betti_predict, satisfies_np,
    SymEntry, SymbolicBetti,
};
