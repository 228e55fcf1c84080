use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableaux have different shapes")]
    ShapeMismatch,

    #[error("{0} needs a horizontal strip")]
    NotHorizontalStrip(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("subspace is not invariant under T")]
    NotInvariant,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ambient {ambient:?} has no free cell in row {row}")]
    AmbientTooSmall { ambient: Vec<u32>, row: u32 },

    #[error("{count} generator tuples exceed the guard of {limit}")]
    GuardExceeded { count: u128, limit: u128 },

    #[error("unknown relation {0:?} (expected dom or box)")]
    UnknownRelation(String),

    #[error("field mismatch: expected p={expected}, found p={found}")]
    FieldMismatch { expected: u32, found: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
