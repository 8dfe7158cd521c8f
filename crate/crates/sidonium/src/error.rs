use std::path::PathBuf;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("group order {order} exceeds the cap {cap}")]
    OrderCap { order: u128, cap: u64 },

    #[error("estimated work {needed} words exceeds the cap {cap}; raise the cap to proceed")]
    WorkCap { needed: u128, cap: u64 },

    #[error("element index {index} out of range for group of order {order}")]
    IndexRange { index: usize, order: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("girth {girth} is below the required {needed}")]
    GirthTooSmall { girth: usize, needed: usize },

    #[error("enumeration budget of {budget} steps exhausted")]
    EnumerationBudget { budget: u64 },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
