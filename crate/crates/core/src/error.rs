use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("census bound {bound} is below the minimum of 3")]
    BoundTooSmall { bound: u64 },

    #[error("census bound {bound} exceeds the supported maximum {max}")]
    BoundTooLarge { bound: u64, max: u64 },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: &'static str, found: String },

    #[error("sequence has {got} terms, {needed} required")]
    TooShort { needed: usize, got: usize },

    #[error("coefficient at m = {m} is not an integer: {value}")]
    NonInteger { m: usize, value: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("embedded data corrupted: {0}")]
    Data(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True when the error is caused by the caller's input rather than a
    /// broken internal invariant.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::NotFundamental(_)
                | Error::BoundTooSmall { .. }
                | Error::BoundTooLarge { .. }
                | Error::OrderMismatch { .. }
                | Error::ConstantTerm { .. }
                | Error::TooShort { .. }
                | Error::Parse(_)
        )
    }
}
