use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part(s) {0:?} not present in partition")]
    PartNotPresent(Vec<usize>),
    #[error("skew shape is empty")]
    EmptyShape,
    #[error("inner partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("degree {degree} is smaller than {k}")]
    DegreeTooSmall { degree: usize, k: usize },
    #[error("rank {n} too small for type {ty}")]
    RankTooSmall { ty: String, n: usize },
    #[error("invalid Jordan type: {0}")]
    InvalidJordanType(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid parabolic subgroup: {0}")]
    InvalidParabolic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not integral: {0}")]
    NotIntegral(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
