use thiserror::Error;

/// Errors raised by the toolkit. Variants are grouped so that front ends can
/// map them onto distinct exit codes (see [`Error::kind`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("degree {degree} is not compatible with {expected}")]
    DegreeMismatch { degree: String, expected: String },

    #[error("tensor is not a monomial ({terms} non-zero terms)")]
    NotMonomial { terms: usize },

    #[error("tensor is not concise")]
    NotConcise,

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("rank {r} is vacuous: dim S_L = {dim}")]
    VacuousRank { r: u64, dim: String },

    #[error("parse error: {0}")]
    Parse(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) => ErrorKind::Parse,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
