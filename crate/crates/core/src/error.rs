use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto exit codes:
/// precondition/domain/parse/numeric failures exit 2, resource caps exit 3.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: u64 },
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
