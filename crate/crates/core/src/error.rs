use alloc::string::String;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A configured resource cap would be exceeded.
    #[error("size limit exceeded: {0}")]
    Size(String),
    /// Input outside the domain of the operation (bad index, non-cocycle, gcd failure, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Exact arithmetic failure such as division by zero.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// An internal identity failed; this signals a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    /// A modular-data identity failed after assembly.
    #[error("convention check failed: {0}")]
    Convention(String),
    /// A lift is required to be a homomorphism and is not.
    #[error("anomaly not trivialized: {0}")]
    NotTrivialized(String),
    /// Linear map that is not an algebra automorphism.
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    /// Objects built over different parents were combined.
    #[error("parent mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(alloc::format!($($arg)*)) };
}
macro_rules! size_err {
    ($($arg:tt)*) => { $crate::error::Error::Size(alloc::format!($($arg)*)) };
}
macro_rules! consistency {
    ($($arg:tt)*) => { $crate::error::Error::Consistency(alloc::format!($($arg)*)) };
}
pub(crate) use {consistency, domain, size_err};
