use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },

    #[error("invalid substitution: shift for z{} involves its own target", target + 1)]
    InvalidSubstitution { target: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Some multitype entry is infinite (finite 1-type violated).
    #[error("infinite type: {0}")]
    InfiniteType(String),

    #[error("invalid weight advancement: {0}")]
    InvalidAdvancement(String),

    #[error("no termination after {0} steps")]
    Nontermination(usize),

    #[error("classification undefined for the constant monomial")]
    ConstantMonomial,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::Dimension { expected, found })
        }
    }
}
