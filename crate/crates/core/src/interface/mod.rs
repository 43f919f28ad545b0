//! Command line entry points and the on-disk archive format.

mod archive;
mod cli;

pub use archive::{RepArchive, FORMAT_VERSION};
pub use cli::{run, Cli, Command, Format, RepArgs};

use thiserror::Error;

use crate::operators::OperatorError;
use crate::patterns::PatternError;

#[derive(Debug, Error)]
pub enum InterfaceError {
    #[error("invalid highest weight: {0}")]
    Pattern(#[from] PatternError),
    #[error("construction failed: {0}")]
    Operator(#[from] OperatorError),
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("malformed archive: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported archive format version {0} (this build reads version {FORMAT_VERSION})")]
    Version(u32),
    #[error("inconsistent archive: {0}")]
    Archive(String),
    #[error("{0}")]
    Usage(String),
}

impl InterfaceError {
    /// Process exit status: 2 for bad input, 3 for a failed construction,
    /// 4 for unreadable or inconsistent files.
    pub fn exit_code(&self) -> i32 {
        match self {
            InterfaceError::Pattern(_) | InterfaceError::Usage(_) => 2,
            InterfaceError::Operator(OperatorError::BadLabel(_)) => 2,
            InterfaceError::Operator(OperatorError::Malformed(_)) => 4,
            InterfaceError::Operator(_) => 3,
            InterfaceError::Io(..)
            | InterfaceError::Json(_)
            | InterfaceError::Version(_)
            | InterfaceError::Archive(_) => 4,
        }
    }
}
