//! JSON report envelope shared by every subcommand.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub config: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Value>,
    pub version: String,
    /// Excluded from golden comparisons.
    pub timestamp_unix: u64,
}

impl ReportEnvelope {
    pub fn new(command: &str, config: Value, results: Value) -> ReportEnvelope {
        ReportEnvelope {
            command: command.to_string(),
            config,
            results,
            residuals: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn with_residuals(mut self, residuals: Value) -> ReportEnvelope {
        self.residuals = Some(residuals);
        self
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("envelope serializes")
        );
    }
}

/// Structured error printed to stderr before a nonzero exit.
#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl ErrorReport {
    pub fn print(kind: &str, error: impl ToString) {
        ErrorReport {
            error: error.to_string(),
            kind: kind.to_string(),
            detail: None,
        }
        .emit();
    }

    pub fn print_with_detail(kind: &str, error: impl ToString, detail: Value) {
        ErrorReport {
            error: error.to_string(),
            kind: kind.to_string(),
            detail: Some(detail),
        }
        .emit();
    }

    fn emit(&self) {
        eprintln!(
            "{}",
            serde_json::to_string(self).expect("error report serializes")
        );
    }
}
