//! Error taxonomy for the command line: what went wrong and which exit
//! status it maps to.
//!
//! Exit code conventions:
//!
//! * `0` — the command ran and every requested verification passed.
//! * `1` — the computation ran into a violated mathematical hypothesis
//!   (for example a normal piece rotating trivially at the evaluation
//!   element) or a requested verification failed.
//! * `2` — the invocation or its input was malformed: unusable flags,
//!   unreadable files, or data that does not match the documented schema.
//!   Schema errors carry the JSON path of the offending value.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation or arguments.
    #[error("{0}")]
    Usage(String),

    /// The input file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// The input file is not valid JSON.
    #[error("{path}: invalid JSON: {message}")]
    Json { path: PathBuf, message: String },

    /// The input parsed as JSON but violates the schema; `path` is the
    /// JSON path of the offending value (for example
    /// `$.filings[0].components[1].pieces[0].character`).
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    /// A mathematical hypothesis of the requested computation fails on
    /// this input; the message states the violated hypothesis.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// A verification the command promised to perform did not pass.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Json { .. }
            | CliError::Schema { .. } => 2,
            CliError::Hypothesis(_) | CliError::Verification(_) => 1,
        }
    }

    /// Wraps a schema violation at a JSON path.
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), message: message.into() }
    }
}

/// Evaluation errors from the fixed-point engine split by kind: data
/// shape problems are schema errors, violated evaluation hypotheses are
/// hypothesis errors.
pub fn from_gsig(e: equisig_core::gsig::GsigError, path: &str) -> CliError {
    use equisig_core::gsig::GsigError;
    match e {
        GsigError::InvalidDescriptor(_) | GsigError::GroupMismatch => {
            CliError::schema(path, e.to_string())
        }
        GsigError::NotCoprime { .. } => CliError::Usage(e.to_string()),
        GsigError::TrivialRotation | GsigError::MissingComponents => {
            CliError::Hypothesis(e.to_string())
        }
        GsigError::Prime(inner) => CliError::Usage(inner.to_string()),
    }
}
