//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for a polygon with {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("sub-polygon indices must be strictly increasing")]
    NotIncreasing,
    #[error("permutation acts on {perm} indices but the polygon has {polygon} vertices")]
    SizeMismatch { perm: usize, polygon: usize },
    #[error("operation requires an ordinary polygon (all vertices distinct)")]
    NotOrdinary,
    #[error("m = {m} outside the valid range 4..={n}")]
    BadM { m: usize, n: usize },
    #[error("line does not cross the interior of the hull")]
    NoInteriorCrossing,
    #[error("polygon is not strict; pass allow_nonstrict to cut anyway")]
    StrictnessRequired,
    #[error("polygon is not convex")]
    NotConvex,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("point {0} is not an extreme point of the hull")]
    NotAllExtreme(String),
    #[error("need at least 3 distinct points")]
    TooFew,
    #[error("point set is degenerate (dimension < 2)")]
    Degenerate,
    #[error("brute-force enumeration limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("guardrail exceeded: {0}")]
    GuardrailExceeded(String),
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
}

pub type Result<T> = std::result::Result<T, Error>;
