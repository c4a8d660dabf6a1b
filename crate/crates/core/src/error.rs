//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the engine and its file front ends.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent configuration input (unknown task type,
    /// broken reference, invalid parameter block).
    #[error("configuration error: {0}")]
    Config(String),

    /// An argument outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A guarded exhaustive enumeration would exceed its size limit.
    #[error("size error: {0}")]
    TooLarge(String),

    /// The requested tasks cannot be combined under the active mode rules.
    #[error("combination error: {0}")]
    Combination(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("TOML parse error: {0}")]
    Toml(#[from] Box<toml::de::Error>),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Toml(Box::new(e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
