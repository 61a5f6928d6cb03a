use thiserror::Error;

/// Errors produced by the store, the sketch, and the simulation harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite element in embedding")]
    NonFinite,

    #[error("token {0} already in vague")]
    AlreadyInVague(u64),

    #[error("token {0} not in vague")]
    NotInVague(u64),

    #[error("vague empty")]
    VagueEmpty,

    #[error("negative score {0}")]
    NegativeScore(f64),

    #[error("token indices must be consecutive: expected {expected}, got {got}")]
    NonConsecutiveIndex { expected: u64, got: u64 },

    #[error("swap divergence: exceeded {0} iterations in one compress call")]
    SwapDivergence(usize),

    #[error("attention row has {got} entries, store holds {expected} tokens")]
    RowLength { expected: usize, got: usize },

    #[error("attention row sums to {0}, expected 1")]
    RowNotNormalized(f64),

    #[error("token index {0} out of range")]
    OutOfRange(u64),

    #[error("store partition violated at index {0}")]
    PartitionViolation(u64),

    #[error("arithmetic overflow in cache size computation")]
    Overflow,

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("decode error: {0}")]
    Decode(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
