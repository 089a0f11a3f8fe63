//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A caller passed an argument that violates an operation's contract
    /// (index out of bounds, zero linear form, malformed table, ...).
    #[error("argument error: {0}")]
    Argument(String),
    /// The input is outside the mathematical domain of the operation
    /// (disconnected graph where connectivity is required, invalid `r`, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested computation exceeds a built-in enumeration guard.
    #[error("resource error: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
