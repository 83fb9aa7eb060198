use thiserror::Error;

/// Errors produced by the library.
///
/// `TheoremViolation` is reserved for situations where a result that should
/// hold by construction fails to; callers treat it as an internal bug rather
/// than bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid action table: {0}")]
    InvalidAction(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("configuration is not closed: {0}")]
    NotClosed(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size guard exceeded: {0}")]
    TooLarge(String),
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
