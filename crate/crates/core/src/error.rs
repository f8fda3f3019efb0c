use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree vector must be nonzero")]
    ZeroVector,
    #[error("degree vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("invalid cyclotomic key: {0}")]
    InvalidKey(String),
    #[error("operation is only defined for univariate data (got {0} variables)")]
    NotUnivariate(usize),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("numerator has non-integral coefficients")]
    NonIntegral,
    #[error("root multiplicities are not Galois-stable at order {order}")]
    GaloisUnstable { order: u64 },
    #[error("group has more than {bound} elements")]
    GroupTooLarge { bound: u64 },
    #[error("{n} weights exceed the subset enumeration bound {bound}")]
    SubsetBoundExceeded { n: usize, bound: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
