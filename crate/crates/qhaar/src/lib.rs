//! Standard-library companion to `qhaar-core`: the expression parser, JSON
//! formats, the on-disk Haar cache, the identity suite and the `qhaar`
//! command-line tool.

pub mod cache;
pub mod cli;
pub mod json;
pub mod parse;
pub mod verify;

pub use qhaar_core;

use thiserror::Error;

/// Failure to read or write one of the file formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed rational {0:?}")]
    Rational(String),
    #[error("{0}")]
    Invalid(String),
    #[error("cache was written under convention {0:?}, expected {expected:?}", expected = cache::CONVENTION)]
    Convention(String),
    #[error(transparent)]
    Engine(#[from] qhaar_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
