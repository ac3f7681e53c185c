//! Crate-wide error type.
//!
//! Shape mismatches on the numerical hot paths (`Mlp::forward`, flow
//! forward/inverse) are programmer errors and panic with the offending shapes;
//! everything that can fail on user input or files returns [`Error`].

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("attribute {attribute} has a single class in the training data")]
    SingleClass { attribute: usize },

    #[error("probe bank is frozen; parameters cannot be modified")]
    FrozenBank,

    #[error("probe bank must be frozen before it is used here")]
    UnfrozenBank,

    #[error("zero weight vector has no hyperplane direction")]
    ZeroWeight,

    #[error("{context}: need at least {needed} items, got {got}")]
    NotEnoughData {
        context: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("bad magic in {path}: expected {expected:?}, found {found:?}")]
    BadMagic {
        path: PathBuf,
        expected: [u8; 4],
        found: [u8; 4],
    },

    #[error("unsupported format version {found} in {path} (expected {expected})")]
    VersionMismatch {
        path: PathBuf,
        expected: u32,
        found: u32,
    },

    #[error("truncated file {path}: wanted {wanted} more bytes")]
    Truncated { path: PathBuf, wanted: usize },

    #[error("corrupt file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("path {0} already exists (pass --force to overwrite)")]
    PathExists(PathBuf),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
