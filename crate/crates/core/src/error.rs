use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdent { name: String, offset: usize },
    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("alphabet: {0}")]
    Alphabet(String),
    #[error("graph file line {line}: {message}")]
    Graph { line: usize, message: String },
    #[error("algebra file line {line}: {message}")]
    Algebra { line: usize, message: String },
    #[error("not a basis word of this context: {0}")]
    NotBasis(String),
    #[error("invalid structure constants: {0}")]
    Invalid(String),
    #[error("straightening ran out of fuel after {steps} steps multiplying {left:?} by {right:?}")]
    FuelExhausted { steps: u64, left: Word, right: Word },
    #[error("no rewrite rule applies to {left:?} * {right:?}")]
    Stuck { left: Word, right: Word },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
