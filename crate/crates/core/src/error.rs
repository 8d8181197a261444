use thiserror::Error;

/// Errors raised by the algebra engine and the command-line layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied something outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// A class or group string failed to parse.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An algebraic check that must hold did not (e.g. a zero-divisor
    /// where injectivity was required).
    #[error("verification failed: {0}")]
    Verification(String),

    /// An invariant of the implementation was violated. Always a bug.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
