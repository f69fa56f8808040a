use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalyticError {
    #[error("kappa must be finite, got {0}")]
    NonFiniteKappa(f64),
    #[error("kappa = {0} is in the convex regime; the Legendre map has no cusps")]
    ConvexRegime(f64),
    #[error("{op} is undefined at p = {p}")]
    Domain { op: &'static str, p: f64 },
    #[error("polynomial coefficient {0} is not finite")]
    NonFiniteCoefficient(f64),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SampleError {
    #[error("need at least 2 samples, got {0}")]
    TooFew(usize),
    #[error("abscissae and values differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("non-finite entry at index {0}")]
    NonFinite(usize),
    #[error("abscissae not strictly increasing at index {0}")]
    NotIncreasing(usize),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Samples(#[from] SampleError),
}
