//! Crate-wide error type.

use std::fmt;

/// Errors surfaced by the library.
#[derive(Debug)]
pub enum Error {
    /// A body/point-set/experiment spec violates its invariants.
    InvalidSpec(String),
    /// An argument is outside the operation's domain (e.g. chord depth).
    Domain(String),
    /// Not enough data for a fit / report.
    Degenerate(String),
    /// Config or CLI text could not be parsed.
    Parse(String),
    /// Underlying I/O failure.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpec(m) => write!(f, "invalid spec: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Degenerate(m) => write!(f, "degenerate input: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidSpec(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
