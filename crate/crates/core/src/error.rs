use thiserror::Error;

/// Errors raised by the library. Messages carry the module that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root_system: invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("root_system: unsupported rank {rank} for type {letter}")]
    UnsupportedRank { letter: char, rank: usize },

    #[error("{context}: index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("{context}: dimension mismatch (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{context}: length mismatch (expected {expected}, got {got})")]
    LengthMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("weyl: group or enumeration exceeds the configured cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("bott_samelson: word length {len} exceeds the configured cap of {cap}")]
    WordTooLong { len: usize, cap: usize },

    #[error("chevalley: word {word} is not reduced")]
    NotReduced { word: String },

    #[error("chevalley: weight {weight} is not dominant")]
    NotDominant { weight: String },

    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
