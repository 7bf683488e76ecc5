use thiserror::Error;

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("no session with id {0}")]
    NotFound(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Game(#[from] liminal_core::Error),
    #[error("session log: {0}")]
    Io(#[from] std::io::Error),
    #[error("session log line {line}: {message}")]
    Corrupt { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, ServiceError>;
