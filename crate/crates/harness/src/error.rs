use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`; known suites: {known}", known = crate::suites::SUITE_IDS.join(", "))]
    UnknownSuite(String),
    #[error("{suite}: configuration violates the hypothesis {hypothesis} ({detail})")]
    Hypothesis { suite: String, hypothesis: String, detail: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] tfnorm_core::Error),
    #[error("{0}")]
    Parse(#[from] tfnorm_identify::ParseError),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    /// Usage and configuration problems exit with 2, everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::UnknownSuite(_)
            | HarnessError::Hypothesis { .. }
            | HarnessError::Config(_)
            | HarnessError::Parse(_)
            | HarnessError::Io { .. }
            | HarnessError::Json(_) => 2,
            HarnessError::Core(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
