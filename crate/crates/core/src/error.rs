//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong, from malformed inputs to violated
/// structural guarantees.
#[derive(Debug, Error)]
pub enum Error {
    /// A coordinate exceeds the exact-arithmetic bound.
    #[error("coordinate {0} out of range (|x|, |y| must be < 2^20)")]
    CoordinateOutOfRange(i64),

    /// Two input points coincide.
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),

    /// Three input points are collinear (general position is required).
    #[error("collinear triple at indices {0}, {1}, {2}")]
    CollinearTriple(usize, usize, usize),

    /// A point set is too small for the requested operation.
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },

    /// A point set is too large for an exhaustive search.
    #[error("point set too large for this operation (n = {got}, limit {limit})")]
    TooLarge { got: usize, limit: usize },

    /// An index does not refer to a point of the set.
    #[error("point index {0} out of bounds for a set of {1} points")]
    IndexOutOfBounds(usize, usize),

    /// A vertex order is not a permutation of the point indices.
    #[error("vertex sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    /// A vertex order has crossing edges.
    #[error("vertex sequence has crossing edges ({0}-{1} and {2}-{3})")]
    NotPlane(usize, usize, usize, usize),

    /// Two points are collinear with a radial-order center.
    #[error("points {0} and {1} are collinear with the sort center")]
    CollinearWithCenter(usize, usize),

    /// A flip does not apply to the given path.
    #[error("flip is not valid for this path: {0}")]
    InvalidFlip(String),

    /// A flip sequence failed replay validation.
    #[error("flip sequence invalid at step {step}: {reason}")]
    InvalidSequence { step: usize, reason: String },

    /// The request needs a structural feature the point set lacks.
    #[error("structural precondition not met: {0}")]
    StructureMismatch(String),

    /// A guaranteed bound or case analysis failed on a concrete instance.
    /// This indicates a genuine counterexample and is always a loud error.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// Malformed textual or binary input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
