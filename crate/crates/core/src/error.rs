use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Text did not conform to the word/expression grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A generator index exceeded the declared ambient rank.
    #[error("generator index {index} exceeds declared rank {rank}")]
    RankExceeded { index: u32, rank: u32 },

    /// Binary series operation on mismatched truncation caps.
    #[error("truncation cap mismatch: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },

    /// Depth is only defined for series with constant term 1.
    #[error("series has constant term {found}, expected 1")]
    ConstantTermNotOne { found: String },

    /// A fixed-width coefficient overflowed; rerun with arbitrary precision.
    #[error("coefficient overflow in fixed-width scalar arithmetic")]
    CoefficientOverflow,

    /// Memory guard tripped: the projected term count exceeds the bound.
    #[error("projected term count {projected} exceeds configured bound {limit}")]
    TermLimit { projected: u128, limit: u128 },

    /// Word-length ceiling exceeded (tower levels grow as 4^i).
    #[error("word length {required} exceeds configured ceiling {limit}")]
    WordLengthLimit { required: u64, limit: u64 },

    /// An index pair violated its required order.
    #[error("index order violation: {message}")]
    IndexOrder { message: String },

    /// A stated precondition failed; the message names the inequality.
    #[error("precondition violated: {message}")]
    Precondition { message: String },

    /// Matrix entry outside the monomial regime {0, ±g}.
    #[error("non-unit entry produced at ({row}, {col}); matrix left the monomial regime")]
    NonUnitEntry { row: usize, col: usize },

    /// Witness transport could not be completed; the reason is explicit.
    #[error("witness transport refused: {reason}")]
    TransportRefused { reason: String },

    /// Malformed or unverifiable input data (sequences, witness files).
    #[error("invalid data: {message}")]
    InvalidData { message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition {
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidData {
            message: message.into(),
        }
    }
}
