use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no solution for the given linear system")]
    NoSolution,
    #[error("rank-deficient hash function, caller should resample")]
    RankDeficient,
    #[error("operation unsupported at this size: {0}")]
    Unsupported(String),
    #[error("malformed encoding: {0}")]
    Malformed(String),
    #[error("session error: {0}")]
    Session(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
