use thiserror::Error;

/// Errors raised by constructors, predicates and the command layer.
#[derive(Debug, Error)]
pub enum Error {
    /// An index or value outside the carrier.
    #[error("domain error: {0}")]
    Domain(String),
    /// Constructor or command parameters rejected.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The operation's input does not satisfy its precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A size guard was hit.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
