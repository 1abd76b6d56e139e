use std::fmt;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside its documented range (e.g. `d = 0` or `i > d`).
    InvalidParameter(String),
    /// Two objects with different ambient dimensions were combined.
    DimensionMismatch { left: usize, right: usize },
    /// The operation requires the coordinates to sum to an integer.
    NonIntegralSum(String),
    /// The point lies outside the dilated hypersimplex being queried.
    OutsidePolytope(String),
    /// Vertex expansion was requested for the empty face.
    EmptyFace,
    /// Brute-force enumeration was requested beyond the supported size.
    EnumerationTooLarge { d: usize, cap: usize },
    /// Malformed textual or JSON input.
    Parse(String),
    /// An exact internal cross-check failed; this indicates a bug.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            Error::NonIntegralSum(msg) => {
                write!(f, "coordinate sum is not an integer: {msg}")
            }
            Error::OutsidePolytope(msg) => write!(f, "point outside polytope: {msg}"),
            Error::EmptyFace => write!(f, "the empty face has no vertices"),
            Error::EnumerationTooLarge { d, cap } => {
                write!(f, "enumeration for d = {d} exceeds the cap d <= {cap}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
