use thiserror::Error;

/// Errors produced by the library. Every variant carries enough context to
/// reproduce the failure from the command line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("unsupported pattern `{0}` (expected a word of S_3, 2-41-3 or 3-14-2)")]
    UnsupportedPattern(String),

    #[error("{input} does not avoid {pattern}: occurrence at positions {positions:?}")]
    PatternViolation {
        input: String,
        pattern: String,
        positions: Vec<usize>,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("weight {weight} at step {step} exceeds the bound {bound}")]
    WeightBound {
        step: usize,
        weight: usize,
        bound: usize,
    },

    #[error("statistic undefined on the empty object: {0}")]
    Empty(&'static str),

    #[error("requested {what} {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("series error: {0}")]
    Series(String),

    #[error("data file error: {0}")]
    Data(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}
