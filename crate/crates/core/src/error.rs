use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("matrix is not a generalized permutation matrix: {0}")]
    NotMonomial(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial is not invariant: monomial {monomial} has a fractional t-weight")]
    NotInvariant { monomial: String },

    #[error("equation {index} does not vanish at the origin")]
    NotAtOrigin { index: usize },

    #[error("group is not free in codimension one: {witness} is a pseudo-reflection")]
    NotFreeInCodim1 { witness: String },

    #[error("ideal generator {monomial} is not invariant under the group")]
    NonInvariantIdeal { monomial: String },

    #[error("ideal is not monomial in an eigenbasis of {element}")]
    UnsupportedIdealBasisChange { element: String },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("too many ring variables: {0} (at most {max} supported)", max = crate::poly_engine::MAX_VARS)]
    TooManyVariables(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
