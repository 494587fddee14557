use thiserror::Error;

/// Errors raised by the exact-arithmetic and combinatorial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: denominator vanishes under {0}")]
    Pole(String),

    #[error("singular matrix")]
    Singular,

    #[error("Sylvester equation is singular: the two matrices share an eigenvalue")]
    SylvesterSingular,

    #[error("shape error: {0}")]
    Shape(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("degenerate family block for {0}")]
    Degenerate(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("the H blocks of families {0} and {1} share an eigenvalue")]
    ConjectureFailure(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
