//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division left a nonzero remainder.
    #[error("nonzero remainder in exact division: {0}")]
    NonZeroRemainder(String),

    /// A series inverse or logarithm was requested for an input whose
    /// degree-0 part is not 1.
    #[error("series operation requires unit constant term: {0}")]
    NonUnitConstantTerm(String),

    /// q-binomial arguments outside 0 <= b <= a.
    #[error("q-binomial index out of range: a={a}, b={b}")]
    IndexOutOfRange { a: i64, b: i64 },

    /// Input expected to be symmetric under the u <-> v swap was not.
    #[error("polynomial not symmetric under u <-> v: {0}")]
    NotSymmetric(String),

    /// A final result expected to have integer coefficients did not.
    #[error("result is not integral: {0}")]
    NotIntegral(String),

    /// A variable appearing in the polynomial was not assigned a value.
    #[error("missing assignment for variable {0}")]
    MissingAssignment(&'static str),

    /// Evaluation hit a zero base with a negative exponent.
    #[error("division by zero evaluating variable {0}")]
    DivisionByZero(&'static str),

    /// Marker operations need a ceiling distinct from the floor.
    #[error("ceiling too low for markers: k={0}")]
    CeilingTooLow(usize),

    /// No path with the requested endpoints and length exists.
    #[error("no path of length {len} from {m} to {n} under ceiling {k}")]
    Unreachable { k: usize, m: usize, n: usize, len: usize },

    /// Explicit path listing is capped to keep enumeration tractable.
    #[error("path listing limited to length {max}, got {got}")]
    LengthGuard { max: usize, got: usize },

    /// Malformed query parameters.
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

pub type Result<T> = std::result::Result<T, Error>;
