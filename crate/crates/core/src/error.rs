use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: substituting {var} = {value} makes a denominator vanish")]
    Pole { var: String, value: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invariance error: {0}")]
    Invariance(String),

    #[error("not idempotent: {0}")]
    NotIdempotent(String),

    #[error("solver error: {0}")]
    Solver(String),

    #[error("convention error: {0}")]
    Convention(String),

    #[error("{0} unresolved crossings in diagram")]
    UnresolvedCrossings(usize),

    #[error("synthesis failure: {0}")]
    Synthesis(String),

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::BadInput(e.to_string())
    }
}
