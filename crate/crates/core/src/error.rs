use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 10^6")]
    NotPrime(u64),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstant,
    #[error("parameter {name} = {value} is excluded for this family")]
    ExcludedParameter { name: &'static str, value: String },
    #[error("integration routes disagree: mahler {mahler}, witt {witt}")]
    RouteDisagreement { mahler: String, witt: String },
    #[error("alternating sums need an odd prime")]
    EvenPrime,
    #[error("polynomial is not odd")]
    NotOdd,
    #[error("{0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("manifest: {0}")]
    Manifest(String),
}
