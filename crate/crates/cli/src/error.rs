use btchow::ErrorCategory;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_INVARIANT: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Engine(#[from] btchow::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Engine(e) => match e.category() {
                ErrorCategory::Input => "parse",
                ErrorCategory::Validation => "validation",
                ErrorCategory::ResourceBound => "resource-bound",
                ErrorCategory::Invariant => "invariant",
            },
            CliError::Output(_) => "output",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.category() {
            "parse" | "output" => EXIT_PARSE,
            "validation" => EXIT_VALIDATION,
            "resource-bound" => EXIT_RESOURCE,
            _ => EXIT_INVARIANT,
        }
    }
}
