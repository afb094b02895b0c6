use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series undefined: denominator vanishes at t = 0")]
    SeriesPole,
    #[error("radicand {0} has a prime factor above the trial-division bound")]
    RadicandTooLarge(u128),
    #[error("square root of a negative rational {0}")]
    NegativeRadicand(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("element is not in Gamma: {0}")]
    NotInGamma(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("module dimension {dim} exceeds the guard {max} (set SPINQ_MAX_DIM to raise it)")]
    SizeGuard { dim: usize, max: usize },
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
