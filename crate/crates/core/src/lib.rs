//! Exact computer algebra for constructing and verifying Galois covers of
//! fake projective planes: finitely presented group computations, exact
//! field and polynomial arithmetic, equivariant section interpolation,
//! cyclic-cover multiplication tables, and Groebner-based model checks.

pub mod claims;
pub mod data;
pub mod equivariant;
pub mod error;
pub mod exactalg;
pub mod fpgroup;
pub mod pipeline;
pub mod util;
pub mod verify;

pub use error::AlgError;
