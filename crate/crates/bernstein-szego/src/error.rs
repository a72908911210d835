//! Library-wide error type.
//!
//! Every fallible operation returns [`Result`]. Domain violations (weights of
//! the wrong rank, parameters outside (-1,1), shallow weights fed to
//! norm formulas) are reported here rather than panicking; panics are
//! reserved for internal invariant breaks.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Root system label not among the supported twelve.
    UnsupportedSystem { given: String },
    /// Weight or parameter vector length does not match the rank.
    DimensionMismatch { expected: usize, got: usize },
    /// Operation requires a dominant weight.
    NotDominant { weight: String },
    /// Norm formula requested for a weight that is not sufficiently deep.
    NotDeep { weight: String, detail: String },
    /// Szego parameter outside (-1,1)\{0}, or long parameters supplied for a
    /// simply-laced system.
    ParameterDomain { detail: String },
    /// An exhaustive enumeration would exceed the configured cap.
    CapExceeded { needed: u128, cap: u128 },
    /// A denominator in a product formula vanished at the given parameters.
    SingularDenominator { detail: String },
    /// Rank-one closed form requested below its degree threshold.
    DegreeTooSmall { ell: i64, m: usize },
    /// Numeric linear algebra failure (singular or ill-conditioned system).
    Numeric { detail: String },
    /// Malformed CLI or config input.
    Parse { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedSystem { given } => {
                write!(
                    f,
                    "unsupported root system {given:?}; supported: A1-A4, B2-B4, C3, C4, D4, G2, F4"
                )
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotDominant { weight } => write!(f, "weight {weight} is not dominant"),
            Error::NotDeep { weight, detail } => {
                write!(f, "weight {weight} is not sufficiently deep: {detail}")
            }
            Error::ParameterDomain { detail } => write!(f, "parameter domain error: {detail}"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration size {needed} exceeds cap {cap}")
            }
            Error::SingularDenominator { detail } => {
                write!(f, "singular denominator: {detail}")
            }
            Error::DegreeTooSmall { ell, m } => {
                write!(f, "degree {ell} below threshold M-1 = {}", *m as i64 - 1)
            }
            Error::Numeric { detail } => write!(f, "numeric failure: {detail}"),
            Error::Parse { detail } => write!(f, "parse error: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
