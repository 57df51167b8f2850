//! Error type shared across the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Simulation errors, split by how the CLI reports them: invalid inputs
/// (bad arguments, violated preconditions) versus physically impossible
/// requests (no finite temperature, trap inversion, unsatisfiable closure).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Precondition or configuration violation.
    InvalidInput(String),
    /// Request with no physical solution in the model's domain.
    Unphysical(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn unphysical(msg: impl Into<String>) -> Self {
        Error::Unphysical(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Unphysical(msg) => write!(f, "unphysical request: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
