use thiserror::Error;

/// Errors raised by parsing and by the combinatorial maps.
///
/// `Parse` covers malformed text; everything else is a domain failure on
/// well-formed input (a crossing pair, a block count mismatch, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid arc diagram: {0}")]
    InvalidArcs(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid vacillating tableau: {0}")]
    InvalidVacillating(String),
    #[error("invalid plane partition: {0}")]
    InvalidPlanePartition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("exhaustive search ceiling exceeded: {0}")]
    Ceiling(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by unparseable input rather than by domain
    /// preconditions.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
