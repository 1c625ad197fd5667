//! Shared error type for the algebra and group-theory engines.

use crate::exactalg::field::FieldTag;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgError {
    #[error("field tag mismatch: {left} vs {right}")]
    TagMismatch { left: FieldTag, right: FieldTag },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} does not exist in {tag}")]
    MissingRoot { what: String, tag: FieldTag },

    #[error("denominator divisible by {p} while reducing mod p")]
    BadDenominator { p: u64 },

    #[error("root choice {root} does not satisfy its congruence mod {p}")]
    BadRootChoice { root: u64, p: u64 },

    #[error("unknown generator symbol '{0}'")]
    UnknownSymbol(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("coset enumeration overflowed budget of {limit} cosets")]
    Overflow { limit: usize },

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("relator '{0}' does not act trivially on the cosets")]
    RelatorNotTrivial(String),

    #[error("subgroup is not normal, quotient group undefined")]
    NotNormal,

    #[error("variable lists do not match: {0}")]
    VariableMismatch(String),

    #[error("action '{0}' does not have the declared order")]
    WrongActionOrder(String),

    #[error("actions do not commute")]
    NonCommutingActions,

    #[error("space is not stable under action '{0}'")]
    UnstableSpace(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("{0}")]
    Pipeline(String),
}
