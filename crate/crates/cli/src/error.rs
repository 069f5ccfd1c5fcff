use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("missing required parameter --{0}")]
    Missing(&'static str),
    #[error(transparent)]
    Domain(#[from] radial_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        1
    }
}

pub fn require<T>(value: Option<T>, name: &'static str) -> Result<T, CliError> {
    value.ok_or(CliError::Missing(name))
}
