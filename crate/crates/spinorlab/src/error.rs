use serde_json::json;
use thiserror::Error;

/// Failures surfaced by the command-line front-end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    /// The job document or flags are invalid.
    #[error("{0}")]
    Input(String),
    /// A constructor or analysis rejected its arguments.
    #[error("{context}: {source}")]
    Domain {
        /// What was being done.
        context: String,
        /// The underlying error.
        source: spinorlab_core::Error,
    },
    /// Reading the job or writing the report failed.
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// Wraps a domain error with context.
    pub fn domain(context: impl Into<String>, source: spinorlab_core::Error) -> Self {
        CliError::Domain {
            context: context.into(),
            source,
        }
    }

    /// Process exit status: 2 for input errors, 3 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Domain { .. } => 3,
        }
    }

    /// Short category name used in the error record.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Domain { .. } => "domain",
            CliError::Io(_) => "io",
        }
    }

    /// Structured record written to standard error.
    pub fn to_record(&self) -> serde_json::Value {
        json!({
            "error": {
                "kind": self.kind(),
                "message": self.to_string(),
                "exit_code": self.exit_code(),
            }
        })
    }
}
