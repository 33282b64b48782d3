use alloc::string::String;

use thiserror::Error;

use crate::weyl::Word;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type {letter}{rank}")]
    UnsupportedType { letter: char, rank: usize },

    #[error("simple index {index} out of range 1..={rank}")]
    BadIndex { index: usize, rank: usize },

    #[error("mask of length {mask} does not match word of length {word}")]
    BadMask { mask: usize, word: usize },

    #[error("word {0} is not reduced")]
    NotReduced(Word),

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    /// An exact division that the mathematics guarantees failed.
    #[error("internal arithmetic error: {0}")]
    InternalError(&'static str),

    #[error("not in span: {0}")]
    NotInSpan(String),

    /// The restriction table could not be built exactly.
    #[error("localization table is inconsistent: {0}")]
    OracleInconsistency(String),
}
