//! Input parsing and report assembly shared by the command-line tool
//! and the browser demo. All numeric payloads are exact: integers stay
//! JSON integers, non-integer rationals become `"p/q"` strings, and
//! floating point is rejected at the parser.

pub mod parse;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] wcx_core::Error),

    #[error("order file: {0}")]
    OrderFile(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl IoError {
    /// Exit-code category: usage, parse, and cap problems are `2`;
    /// they never produce a report.
    pub fn kind(&self) -> &'static str {
        match self {
            IoError::Parse(_) => "parse",
            IoError::OrderFile(_) => "order-file",
            IoError::Json(_) => "json",
            IoError::Core(e) => match e {
                wcx_core::Error::CapExceeded { .. } | wcx_core::Error::GroundSetTooLarge { .. } => {
                    "cap"
                }
                _ => "precondition",
            },
        }
    }

    /// Machine-readable error object, printed to stdout on exit code 2.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "schema_version": report::SCHEMA_VERSION,
            "error": { "kind": self.kind(), "message": self.to_string() },
        }))
        .expect("error objects serialize")
    }
}

pub type IoResult<T> = std::result::Result<T, IoError>;
