//! Error type shared by all core modules.

use alloc::string::String;
use core::fmt;

/// Errors raised by core operations.
///
/// `Domain` covers violated preconditions (malformed partitions, order
/// mismatches, parameters outside a proposition's hypothesis), `Resource`
/// covers explicit size caps (brute-force counting, matrix dimensions).
/// The distinction maps onto the CLI exit codes 1 and 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Domain(String),
    Resource(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource(msg) => write!(f, "resource error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
