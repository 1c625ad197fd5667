//! Verification tools: Gröbner bases over GF(p), Hilbert polynomials,
//! Jacobian smoothness checks, and C3 diagonalization of models.

pub mod diag;
pub mod groebner;
pub mod hilbert;
pub mod order;
pub mod smooth;

pub use diag::{diagonalize_c3, total_monomial_count};
pub use groebner::{groebner_basis, GroebnerBasis};
pub use hilbert::{hilbert_polynomial, HilbertData};
pub use order::MonomialOrder;
pub use smooth::{smoothness_check_mod_p, SmoothnessOptions, SmoothnessReport};
