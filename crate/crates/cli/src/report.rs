//! The run report: what was asked, a digest of the input it was asked
//! about, and the structured results.
//!
//! The serialized report is deterministic for identical inputs: it
//! carries no timestamps, hostnames, or other wall-clock data.  Timing is
//! measured by the binary and printed to stderr only, so two runs over
//! the same input produce byte-identical reports.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Echo of the command, digest of the input file (when there was one),
/// and the structured results of the run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    /// The invoked subcommand and its arguments, echoed verbatim.
    pub command: Vec<String>,
    /// SHA-256 of the raw input file bytes, as lowercase hex.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub input_digest: Option<String>,
    /// Command-specific structured results.
    pub results: Value,
}

impl RunReport {
    pub fn new(command: Vec<String>, input_digest: Option<String>, results: Value) -> Self {
        RunReport { command, input_digest, results }
    }

    /// Serializes the report as pretty-printed JSON with a trailing
    /// newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_to(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json())
            .map_err(|source| CliError::Io { path: path.to_path_buf(), source })
    }
}

/// Lowercase hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}
