use thiserror::Error;

/// Errors raised by the generators, the bijection and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={len}: {entries:?}")]
    NotAPermutation { len: usize, entries: Vec<u32> },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("position {pos} out of range 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("patterns must have length at least 2, got {0}")]
    PatternTooShort(usize),

    #[error("unsupported pattern {0}; expected one of 231, 132, 213, 312")]
    UnsupportedPattern(String),

    #[error("invalid Schröder path `{0}`")]
    InvalidPath(String),

    #[error("unknown pattern class `{0}`")]
    UnknownClass(String),

    #[error("class `{class}` needs a length parameter p >= 2")]
    MissingParameter { class: String },

    #[error("class `{class}` requires p >= 2, got {p}")]
    BadParameter { class: String, p: usize },

    #[error("oracle size n={n} exceeds the cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("length n={n} is below the minimum of {min}")]
    LengthTooSmall { n: usize, min: usize },

    #[error("list is empty")]
    EmptyList,

    #[error("ragged list: entry {index} has length {found}, expected {expected}")]
    RaggedList {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("cannot parse `{0}` as a permutation")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
