use thiserror::Error;

/// Errors raised by the group engine and the algorithms built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the enumeration cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup lattice exceeds the cap of {cap} subgroups")]
    LatticeCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the oracle cap of {cap}")]
    OracleCapExceeded { order: usize, cap: usize },

    #[error("element {0} is not a member of the group")]
    NotAMember(usize),

    #[error("subgroup is not normal in the enclosing subgroup")]
    NotNormal,

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("algebra elements belong to different groups")]
    GroupMismatch,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by a size or resource limit, as opposed to malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. }
                | Error::LatticeCapExceeded { .. }
                | Error::OracleCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
