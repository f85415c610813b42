use thiserror::Error;

/// Errors raised by the algorithms and parsers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binary strings must be nonempty")]
    EmptyString,

    #[error("invalid symbol {symbol:?} at position {position}; expected '0' or '1'")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("block sizes must be positive and nonempty")]
    InvalidBlocks,

    #[error("MSS instance infeasible: cannot pick {r} non-neighboring values out of {m}")]
    Infeasible { m: usize, r: usize },

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("weights must not all be zero")]
    ZeroWeights,

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("unmapped event values: {}", .0.join(", "))]
    UnmappedValues(Vec<String>),
}

pub type Result<T> = std::result::Result<T, Error>;
