use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid Farey order h = {0} (must be at least 1)")]
    InvalidOrder(i64),

    #[error("{0} is not an h-Farey fraction for h = {1}")]
    NotFarey(String, i64),

    #[error("fraction must be positive, got {0}")]
    NonPositive(String),

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("semigroup {0} is not canonically defined")]
    NotCanonical(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("Farey interval mismatch: {0}")]
    FareyMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bitset width {width} too small: index {index} required")]
    WidthOverflow { width: usize, index: usize },

    #[error("invalid search configuration: {0}")]
    InvalidSearch(String),

    #[error("time limit reached after {branches} branches")]
    TimeLimit { branches: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
