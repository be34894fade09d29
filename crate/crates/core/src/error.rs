use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient in {0} is not an invertible constant")]
    NonInvertibleLeadingCoefficient(String),
    #[error("polynomial has degree zero in {0}")]
    DegreeZero(String),
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("classes live on different Chow rings ({0} vs {1})")]
    RingMismatch(String, String),
    #[error("unknown base variety {0:?}")]
    UnknownBase(String),
    #[error("generator scale of codimension {0} is undefined on this ring")]
    UndefinedGenerator(usize),
    #[error("class is not pure of codimension {0}")]
    NotPure(usize),
    #[error("rank {0} is not supported here (expected {1})")]
    UnsupportedRank(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
