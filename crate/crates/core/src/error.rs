use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("length {requested} out of range for a word of length {length}")]
    LengthOutOfRange { requested: usize, length: usize },

    #[error("projection index {0} is not a dependent pair")]
    IndependentPair(String),

    #[error("operands are over different alphabets")]
    AlphabetMismatch,

    #[error("operands are over different fields")]
    FieldMismatch,

    #[error("inverse of zero")]
    DivisionByZero,

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("maximum of an empty set")]
    EmptySet,

    #[error("operation undefined for the zero element")]
    ZeroElement,

    #[error("element is scalar")]
    ScalarElement,

    #[error("malformed coefficient `{0}`")]
    MalformedCoefficient(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("impossible constraint: {0}")]
    ImpossibleConstraint(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
