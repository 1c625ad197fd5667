//! Exact arithmetic: field elements, dense linear algebra, Smith normal form,
//! multivariate polynomials and the polynomial text format.

pub mod field;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratrec;
pub mod snf;

pub use field::{FieldElement, FieldTag};
pub use matrix::Matrix;
pub use poly::{monomials_of_degree, reduce_mod_p, Exponents, MultiPoly};
pub use ratrec::{crt, rational_reconstruct};
pub use snf::{smith_normal_form, snf_diagonal, SnfResult};
