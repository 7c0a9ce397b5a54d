use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{op}: the zero polynomial is not a valid input")]
    ZeroInput { op: &'static str },

    #[error("{op}: constant polynomials are not a valid input")]
    ConstantInput { op: &'static str },

    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("exponent overflow at byte {pos}")]
    ExponentOverflow { pos: usize },

    #[error("divisor count {count} exceeds the cap of {cap}")]
    DivisorCapExceeded { count: u128, cap: u64 },

    #[error("max degree {requested} is above the configured ceiling {ceiling}")]
    DegreeCeiling { requested: usize, ceiling: usize },

    #[error("max omega {0} is outside the supported range 2..=4")]
    OmegaOutOfRange(usize),

    #[error("unknown catalog name `{0}`")]
    UnknownConstant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
