use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("words must have equal length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("word of {0} letters exceeds the {max}-letter cap", max = crate::words::MAX_WORD_LEN)]
    WordTooLong(usize),
    #[error("empty word is not a valid game pattern")]
    EmptyWord,
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("malformed overlap chain: {0}")]
    InvalidChain(String),
    #[error("overlap {overlap} is not a correlation index of ({left}, {right})")]
    InvalidOverlap {
        left: String,
        right: String,
        overlap: usize,
    },
    #[error("word is not a single overlap chain of the pair")]
    NotAnOverlap,
    #[error("auto-correlations differ: [A,A]={0} vs [B,B]={1}")]
    AutocorrelationMismatch(u64, u64),
    #[error("operation requires two distinct words")]
    EqualWords,
    #[error("pair has a zero asymptotic denominator (degenerate)")]
    DegeneratePair,
    #[error("asymptotic denominator argument is negative: D = {0}")]
    NegativeDenominator(i128),
    #[error("Cor(A) and Cor(B) coincide, so their symmetric difference is empty")]
    EmptySymmetricDifference,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
