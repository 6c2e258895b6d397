use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(String),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: usize,
        right: String,
        right_size: usize,
    },
    #[error("invalid family of diagrams: {0}")]
    InvalidFamily(String),
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("degree {degree} exceeds the exact computation cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("zero-probability source class {0}")]
    ZeroProbability(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
