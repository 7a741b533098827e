use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by construction, IO and training entry points.
///
/// Validation of already-constructed bundles is reporting-only and goes
/// through [`crate::types::ValidationReport`] instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("atlas mismatch: {0}")]
    AtlasMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("pose out of joint limits: {0}")]
    PoseOutOfLimits(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },

    #[error("training diverged at step {step}: non-finite {term}")]
    Divergence { step: usize, term: String },

    #[error("missing checkpoint: {0}")]
    MissingCheckpoint(String),

    #[error("unknown ablation id: {0}")]
    UnknownAblation(String),

    #[error("frame {frame}: {source}")]
    Frame {
        frame: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Format { path: path.into(), message: message.into() }
    }

    pub fn in_frame(self, frame: usize) -> Self {
        Error::Frame { frame, source: Box::new(self) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
