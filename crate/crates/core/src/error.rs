use thiserror::Error;

use crate::scalar::{FieldTag, ScalarParseError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),

    #[error("{0}")]
    InvalidAlgebra(String),

    #[error("map is not multiplicative: f([e{i},e{j}]) != [f(e{i}),f(e{j})]")]
    NotMorphism { i: usize, j: usize },

    #[error("map is not surjective (rank {rank}, codomain dimension {codomain})")]
    NotSurjective { rank: usize, codomain: usize },

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("object not perfect; {0}")]
    NotPerfect(String),

    #[error("extension is not central: {0}")]
    NotCentral(String),

    #[error("extension is not trivial")]
    NotTrivial,

    #[error("map is not a section of the extension")]
    NotSection,

    #[error("codomains do not match")]
    CodomainMismatch,

    #[error("objects are not composable")]
    NotComposable,

    #[error("variety mismatch: {0}")]
    VarietyMismatch(String),

    #[error("algebra does not satisfy the laws of {0}")]
    LawViolation(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("law is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("condition (UCE) violated: {0}")]
    UceViolation(String),

    #[error("assertion failed: {0}")]
    Assertion(String),

    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("invalid prime {0}: need an odd prime")]
    InvalidPrime(u64),

    #[error(transparent)]
    Scalar(#[from] ScalarParseError),

    #[error("{0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns `Err(Error::Assertion)` carrying `msg` unless `cond` holds.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Assertion(msg()))
    }
}
