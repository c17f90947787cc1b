use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are coarse on purpose: callers (the CLI in particular) map
/// them onto exit codes, so each one names a distinct failure class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph disconnected")]
    Disconnected,
    #[error("not planar")]
    NotPlanar,
    #[error("not found: {0}")]
    NotFound(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
