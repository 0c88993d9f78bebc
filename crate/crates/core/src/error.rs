use thiserror::Error;

/// Errors raised while building instances, checking committees or running rules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("voter {voter} both approves and disapproves candidate {candidate}")]
    Overlap { voter: usize, candidate: usize },

    #[error("out of range: {0}")]
    Range(String),

    #[error("committee has {got} members, expected {expected}")]
    Size { expected: usize, got: usize },

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inconsistent ballot: {0}")]
    Consistency(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
