//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by metric evaluation, domain construction and the
/// verification harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A direction was required but a zero vector was supplied.
    #[error("zero vector where a nonzero direction is required")]
    ZeroVector,

    /// A point does not satisfy the domain's membership predicate.
    #[error("point lies outside the domain")]
    OutsideDomain,

    /// A scalar argument fell outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Two points (or a point and a domain) disagree on dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A sampled domain was built with no boundary points.
    #[error("boundary sample set is empty")]
    EmptyBoundary,

    /// A distortion function evaluated so close to 1 that the result
    /// overflows.
    #[error("distortion function saturated near 1")]
    Saturated,

    /// The requested inequality or probe is not registered.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// A bracketing root solve failed to find a sign change.
    #[error("bracketing failed: no sign change on the search interval")]
    BracketFailure,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    /// Malformed boundary file contents.
    #[error("boundary file: {0}")]
    BoundaryFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
