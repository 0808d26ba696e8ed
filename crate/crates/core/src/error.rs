//! Crate-wide error type, grouped into categories the CLI maps to exit codes.

use std::path::PathBuf;

/// Errors produced anywhere in the classification pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Unusable settings: bad flag values, missing columns, invalid hyperparameters.
    #[error("configuration error: {0}")]
    Config(String),

    /// Input data violates a contract: unknown label, empty URL, shape mismatch.
    #[error("data error: {0}")]
    Data(String),

    /// Training produced a non-finite value.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Filesystem or socket failure.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    /// A model bundle file is malformed, truncated, or unsupported.
    #[error("bundle format error: {0}")]
    Format(String),

    /// An internal invariant was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
