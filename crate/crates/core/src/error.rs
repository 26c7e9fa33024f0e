//! Error categories shared by the whole crate.
//!
//! Every fallible operation reports one of three categories, and the CLI maps
//! them onto stable process exit codes: domain errors exit 1, capacity errors
//! exit 2, syntax errors exit 3 (0 is success).

use crate::cli::parse::ParseError;

/// Categorized failure for any operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input is outside the operation's mathematical domain
    /// (zero polynomial where a nonzero one is required, non-monic input to a
    /// monic-only test, empty range, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured work or memory bound was exceeded. The computation is
    /// abandoned rather than silently truncated.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Input text could not be parsed.
    #[error("syntax error: {0}")]
    Syntax(#[from] ParseError),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// Process exit code the CLI uses for this error category.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 1,
            Error::Capacity(_) => 2,
            Error::Syntax(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
