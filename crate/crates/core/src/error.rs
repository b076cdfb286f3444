use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constant term {0} is not a unit over the integers")]
    NotInvertible(BigInt),

    #[error("constant term is zero; logarithmic derivative undefined")]
    ZeroConstantTerm,

    #[error("coefficient {index} of the logarithmic derivative is not an integer")]
    NonIntegral { index: usize },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },

    #[error("invalid {what}: {value:?}")]
    InvalidSelector { what: &'static str, value: String },

    #[error("table `{name}` covers 0..={max_n} but index {needed} was requested")]
    TableTooShort {
        name: String,
        needed: u64,
        max_n: u64,
    },

    #[error("{what} = {value} exceeds the enumeration guard of {limit}")]
    OverGuard {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid product factor: {0}")]
    InvalidFactor(String),

    #[error("inexact division at n = {n}: {numerator} / {divisor}")]
    InexactDivision {
        n: u64,
        numerator: BigInt,
        divisor: BigInt,
    },

    #[error("identity `{id}` is not stated at n = {n} (domain starts at {start})")]
    OutOfDomain { id: String, n: u64, start: u64 },

    #[error("unknown identity key `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{id}` requires parameter `{param}`")]
    MissingParameter { id: String, param: &'static str },
}
