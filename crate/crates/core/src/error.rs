use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid base field: {0}")]
    InvalidField(String),

    #[error("invalid field element: {0}")]
    InvalidElement(String),

    #[error("invalid tower: {0}")]
    InvalidTower(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0}")]
    Domain(String),

    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("config error: {0}")]
    ConfigValue(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
