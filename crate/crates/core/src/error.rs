use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot compare an ordinary shape with a shifted one")]
    MixedShapeKinds,
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("{shape} does not fit in {bound}")]
    OutOfBounds { shape: String, bound: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable {0} is outside the declared range")]
    VariableIndex(String),
    #[error("target is not in the span of the basis; residual {0}")]
    NotInSpan(String),
    #[error("basis is rank deficient")]
    RankDeficient,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("slide cannot start at ({0},{1})")]
    BadSlide(usize, usize),
    #[error("methods disagree: {0}")]
    Inconsistent(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
