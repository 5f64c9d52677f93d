//! Error type shared by every module in the crate.

use std::fmt;

/// Errors produced by exact arithmetic, sequence evaluation, and geometry
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Multiplicative inverse of zero was requested.
    ZeroDivision,
    /// A Fibonacci index exceeds the configured engine limit.
    IndexOverflow { index: i64 },
    /// A floating-point result left the representable range.
    Overflow(String),
    /// A literal could not be parsed.
    Parse(String),
    /// A verification domain violates its bounds.
    InvalidDomain(String),
    /// A spiral resolution parameter is out of range.
    Resolution(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivision => write!(f, "division by zero"),
            Error::IndexOverflow { index } => {
                write!(f, "index {index} exceeds the Fibonacci engine limit")
            }
            Error::Overflow(what) => write!(f, "overflow: {what}"),
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::InvalidDomain(what) => write!(f, "invalid domain: {what}"),
            Error::Resolution(what) => write!(f, "resolution out of range: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
