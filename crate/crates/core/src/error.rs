//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index error: {0}")]
    Index(String),

    #[error("vocabulary error: {0}")]
    Vocab(String),

    #[error("alignment error: {0}")]
    Alignment(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("data error: {0}")]
    Data(String),

    #[error("training error: {0}")]
    Training(String),

    #[error("transplant error: {0}")]
    Transplant(String),

    #[error("strategy error: {0}")]
    Strategy(String),

    /// Blob header does not start with the expected magic bytes.
    #[error("codec error: bad magic bytes (not a weights blob)")]
    CodecMagic,

    #[error("codec error: unsupported format version {found} (expected {expected})")]
    CodecVersion { found: u32, expected: u32 },

    #[error("codec error: truncated blob: {0}")]
    CodecTruncated(String),

    #[error("codec error: integrity: {0}")]
    CodecIntegrity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
