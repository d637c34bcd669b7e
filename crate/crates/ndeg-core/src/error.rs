use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed profile or graph text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Arguments outside an operation's documented domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A builder was invoked on a profile that fails its admission check.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The profile is provably not realizable in the requested model.
    #[error("not realizable: {0}")]
    NotRealizable(String),

    /// The decision procedure cannot settle the instance either way.
    #[error("undecided: {0}")]
    Undecided(String),

    /// A construction finished but failed its own post-verification.
    #[error("internal construction error: {0}")]
    Construction(String),

    /// An exhaustive-search argument exceeds the configured size limit.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    /// Unknown serialization format name.
    #[error("unknown format: {0}")]
    UnknownFormat(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
