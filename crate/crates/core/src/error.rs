//! Error type shared by all modules.

use std::fmt;

/// Errors raised by constructors and operations.
///
/// `Internal` marks a broken invariant (e.g. an exact division that the
/// theory guarantees must succeed); callers treat it as a bug, not as bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a documented precondition.
    Invalid(String),
    /// Text that does not parse as the expected format.
    Parse(String),
    /// An invariant that must hold for valid inputs failed.
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
