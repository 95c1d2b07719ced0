use thiserror::Error;

/// Errors raised by the library. Solvers never return a wrong answer in place
/// of one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("edge {0} out of range")]
    InvalidEdge(usize),
    #[error("no path between {s} and {t}")]
    NoPath { s: usize, t: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("element kind does not match the problem")]
    KindMismatch,
    #[error("oracle refused: {0}")]
    OracleTooLarge(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
