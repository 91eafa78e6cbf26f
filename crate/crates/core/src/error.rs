use alloc::string::String;

/// Errors raised by the group algorithms.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("cycles are not disjoint: point {0} repeats")]
    NonDisjointCycles(u32),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("{what} of order {order} is too large for element scan (bound {bound})")]
    TooLargeForScan {
        what: &'static str,
        order: u64,
        bound: u64,
    },
    #[error("{what} is {size}, exceeding the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u64,
        bound: u64,
    },
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("group order overflows u64")]
    OrderOverflow,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypothesis not met: {0}")]
    Inapplicable(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
