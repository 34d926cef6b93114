use thiserror::Error;

/// Every failure the library reports. Cap violations and parse errors are
/// surfaced explicitly and never truncated silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("undeclared atom `{name}` at byte {offset}")]
    UndeclaredAtom { name: String, offset: usize },

    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),

    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),

    #[error("invalid weight `{value}`: {reason}")]
    InvalidWeight { value: String, reason: String },

    #[error("invalid number `{value}`: {reason}")]
    InvalidNumber { value: String, reason: String },

    #[error("{what} limit exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid parameter for {measure}: {reason}")]
    InvalidParameter { measure: String, reason: String },

    #[error("unknown measure `{0}`")]
    UnknownMeasure(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("measure {measure} failed: {source}")]
    Measure { measure: String, source: Box<Error> },

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
