use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value {value} exceeds table limit {limit}")]
    OutOfRange { value: u64, limit: u64 },

    #[error("cannot allocate a table of {0} entries")]
    Resource(u64),

    #[error("({0}, {1}, {2}) violates the triangle inequality")]
    NotTriangle(u64, u64, u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid tetrahedron {0:?}: {1}")]
    InvalidTetrahedron([u64; 6], &'static str),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("points {0:?}, {1:?}, {2:?} are collinear")]
    Collinear((i64, i64), (i64, i64), (i64, i64)),

    #[error("algorithms disagree at n={n}: {detail}")]
    Mismatch { n: u64, detail: String },

    #[error("incomplete input: {0}")]
    Incomplete(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("manifest error: {0}")]
    Manifest(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
