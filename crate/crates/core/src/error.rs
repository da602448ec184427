use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} is out of range (1..=63)")]
    BadRingSize(usize),

    #[error("ring mismatch: {0} variables vs {1} variables")]
    RingMismatch(usize, usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("enumeration cap exceeded: {what} = {value} exceeds the limit {limit}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("binomial coefficient with negative upper argument {0}")]
    NegativeBinomial(i64),

    #[error("invalid ideal pair: {0}")]
    InvalidPair(String),

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("the unit ideal corresponds to the void complex")]
    VoidComplex,

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
