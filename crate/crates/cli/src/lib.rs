//! IO companion to `eigenperm-core`: machine-readable output records with
//! JSON / CSV / text codecs, and the on-disk checkpoint format for resumable
//! searches.

pub mod checkpoint;
pub mod driver;
pub mod format;
pub mod record;

/// Errors from parsing records or checkpoint files.
#[derive(Debug, thiserror::Error)]
pub enum CodecError {
    #[error("malformed {format} record: {reason}")]
    Malformed {
        format: &'static str,
        reason: String,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("checkpoint file is corrupt: {reason}")]
    CorruptCheckpoint { reason: String },
}

impl CodecError {
    pub(crate) fn malformed(format: &'static str, reason: impl Into<String>) -> CodecError {
        CodecError::Malformed {
            format,
            reason: reason.into(),
        }
    }
}
