//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by sequence constructors, transforms and checkers.
///
/// Arithmetic never rounds; every failure here is a structural problem
/// (bad index, violated precondition, malformed input) or a loud internal
/// consistency failure (a quantity that must be an integer was not).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index outside the stored range was requested. Sequences never
    /// extend silently.
    #[error("index {index} outside stored range [{lo}, {hi}]")]
    IndexOutOfRange { index: u64, lo: u64, hi: u64 },

    /// A sequence with the wrong first index was passed to a transform.
    #[error("sequence starts at index {found}, expected {expected}")]
    WrongOffset { expected: u64, found: u64 },

    /// A sequence is too short for the requested computation.
    #[error("sequence too short: need indices up to {needed}, have up to {have}")]
    InsufficientLength { needed: u64, have: u64 },

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A series operation required a specific constant term.
    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    /// A series coefficient that must be an integer was not.
    #[error("coefficient of x^{index} is not an integer: {value}")]
    NonIntegerCoefficient { index: usize, value: String },

    /// A quantity that is provably integral came out fractional; this
    /// indicates a bug, never bad input.
    #[error("internal consistency failure: {context} non-integral at index {index}")]
    NonIntegralResult { context: &'static str, index: u64 },

    /// The hypothesis of the geometric quotient construction failed:
    /// `prime` divides the base but not base/div.
    #[error("prime {prime} divides base but not base/div")]
    QuotientHypothesis { prime: u64 },

    /// A persisted Euler-number file failed strict validation.
    #[error("cache file line {line}: {message}")]
    CacheFormat { line: usize, message: String },

    /// Filesystem-level failure while reading or writing a cache file.
    #[error("cache io: {0}")]
    CacheIo(String),
}

pub type Result<T> = std::result::Result<T, Error>;
