use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlbertError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Euclidean Jordan algebra: {0}")]
    NotEuclidean(String),
    #[error("degree overflow: degree {degree} exceeds cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error("not a derivation: {0}")]
    NotDerivation(String),
    #[error("not a module endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("internal fault: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AlbertError>;
