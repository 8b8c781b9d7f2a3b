//! Error type shared by every module.

use thiserror::Error;

/// Library error. The variant decides the CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Unknown type, malformed parameters, or an otherwise invalid setup.
    #[error("config error: {0}")]
    Config(String),
    /// Bad arguments to an operation (wrong rank, unknown token, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// An input object violates a defining relation.
    #[error("validation error: {0}")]
    Validation(String),
    /// A requested computation exceeds a configured limit.
    #[error("resource error: {0}")]
    Resource(String),
    /// Argument outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),
    /// Recognised but not supported in this build.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Broken internal invariant.
    #[error("internal error: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code for this error: 2 for usage-like problems, 3 for resource limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) => 3,
            Error::Validation(_) | Error::Internal(_) => 1,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
