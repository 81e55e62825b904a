//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Vectors or words of mismatched length/alphabet were combined.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A composition violated the constraints of the requested operation.
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    /// A scalar parameter was out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A graph edge referenced an unknown vertex or color, or was duplicated.
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    /// A vertex id outside the graph was referenced.
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),

    /// A code violated one of its declared invariants.
    #[error("invalid code: {0}")]
    InvalidCode(String),

    /// A decomposition or family file did not satisfy the expected schema.
    #[error("invalid file: {0}")]
    InvalidFile(String),

    /// A decomposition was used with a construction kind it does not fit.
    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    /// An invariant computation did not resolve within its search bound.
    #[error("unresolved invariant: {0}")]
    Unresolved(String),

    /// Integer overflow in an exact computation.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
