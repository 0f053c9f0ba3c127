pub mod binor_cmd;
pub mod dirac_cmd;
pub mod eval_cmd;
pub mod hierarchy_cmd;
pub mod rep_cmd;

use cliffor::algebra::{Sign, Signature};

/// Domain failures exit 1 with a structured stderr line; usage failures
/// exit 2 like any argument error.
#[derive(Debug)]
pub enum CliError {
    Domain {
        kind: String,
        message: String,
        detail: Option<serde_json::Value>,
    },
    Usage(String),
}

impl CliError {
    pub fn domain(kind: &str, message: impl ToString) -> CliError {
        CliError::Domain {
            kind: kind.to_string(),
            message: message.to_string(),
            detail: None,
        }
    }

    pub fn parse_error(e: crate::expr::ExprError) -> CliError {
        CliError::Domain {
            kind: "parse".to_string(),
            message: e.to_string(),
            detail: serde_json::to_value(&e).ok(),
        }
    }
}

/// Parses a `+`/`-` pattern into a signature.
pub fn parse_signature(pattern: &str) -> Result<Signature, CliError> {
    let signs = pattern
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(CliError::Usage(format!(
                "signature may contain only '+' and '-', found {other:?}"
            ))),
        })
        .collect::<Result<Vec<Sign>, CliError>>()?;
    Signature::from_signs(&signs).map_err(|e| CliError::Usage(e.to_string()))
}
