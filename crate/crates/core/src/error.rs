use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A partition, matrix or profile does not have the required shape.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The input lies outside the weight class or size range an operation supports.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capacity exceeded: {what} needs {requested}, limit is {limit}")]
    Capacity {
        what: String,
        requested: u128,
        limit: u128,
    },
    /// A witness builder could not produce a verified construction.
    #[error("construction error: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An enumeration stopped at its budget; `partial` holds what was collected
    /// (coalitions as 0-based agent lists).
    #[error("budget exceeded: {what} needs {requested} evaluations, budget is {limit} (partial result kept)")]
    Budget {
        what: String,
        requested: u128,
        limit: u128,
        partial: Vec<Vec<usize>>,
    },
    /// Re-running a recorded witness did not reproduce it.
    #[error("replay mismatch: {0}")]
    Replay(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn capacity(what: impl Into<String>, requested: u128, limit: u128) -> Self {
        Error::Capacity {
            what: what.into(),
            requested,
            limit,
        }
    }
}
