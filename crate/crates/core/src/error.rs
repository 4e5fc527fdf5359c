//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("indeterminate root count: the zero polynomial vanishes everywhere")]
    ZeroPolynomial,

    #[error("constant polynomial has no roots to locate")]
    ConstantPolynomial,

    #[error("invalid interval: require lo < hi")]
    EmptyInterval,

    #[error("epsilon must be positive")]
    NonPositiveEps,

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("degenerate star configuration: require s >= c")]
    DegenerateStar,

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("arity mismatch: expected {expected} exponents, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("alpha undefined for the zero ideal")]
    AlphaUndefined,

    #[error("empty prime list")]
    EmptyPrimes,

    #[error("invalid prime set: {0}")]
    InvalidPrimes(String),

    #[error("delta set may be infinite: {0}")]
    DeltaMaybeInfinite(String),
}
