use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid biword: {0}")]
    InvalidBiword(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sign ledger violated: {0}")]
    LedgerViolation(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
