use thiserror::Error;

use crate::boolfn::FunctionClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("hypothesis representation does not match class {0}")]
    RepresentationMismatch(FunctionClass),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("exact performance needs 2^{n} evaluations, above the enumeration cap n <= {cap}; use empirical performance")]
    TooLarge { n: usize, cap: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
