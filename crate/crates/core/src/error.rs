use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArfError {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),

    #[error("generators have gcd {0}; the complement would be infinite")]
    GcdNotOne(i64),

    #[error("cannot parse generator list {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} is not a positive member of the semigroup")]
    NotAPositiveMember(i64),

    #[error("ideals live over different semigroups")]
    AmbientMismatch,

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, ArfError>;
