//! Crate-wide error type.

use std::fmt;

/// Largest natural number for which the crate guarantees exact results.
///
/// Arithmetic on digits, counts and dimensions stays inside `u64`/`i64`
/// below this bound; larger inputs are rejected instead of silently
/// overflowing.
pub const MAX_NATURAL: u64 = i64::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Trial division found a factor (or the value is 0 or 1).
    NotPrime(u64),
    /// Primes above 2^31 - 1 are rejected so residue products stay in `u64`.
    PrimeTooLarge(u64),
    /// Naturals above [`MAX_NATURAL`] are rejected.
    NaturalTooLarge(u64),
    /// Class indices are 1, 2, ... or infinity; 0 is outside the domain.
    ClassIndexZero,
    /// An argument violated a documented domain restriction.
    InvalidArgument(&'static str),
    /// `k` outside {-1, 0, ..., n-1}.
    KOutOfRange { k: i64, n: u64 },
    /// A guarded enumeration was asked to exceed its hard limit.
    ResourceLimit {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    /// Field order p^e above the enumeration cap of 2^20.
    FieldTooLarge { p: u64, e: u32 },
    /// Inversion of the zero field element.
    DivisionByZero,
    /// A digit vector had an entry >= p or encoded a value out of range.
    InvalidDigits(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::PrimeTooLarge(p) => {
                write!(f, "prime {p} exceeds the supported maximum 2^31 - 1")
            }
            Error::NaturalTooLarge(n) => {
                write!(f, "{n} exceeds the supported maximum 2^63 - 1")
            }
            Error::ClassIndexZero => write!(f, "class index must be at least 1"),
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
            Error::KOutOfRange { k, n } => {
                write!(f, "k = {k} outside the valid range -1..={}", *n as i64 - 1)
            }
            Error::ResourceLimit {
                what,
                requested,
                limit,
            } => write!(f, "{what} = {requested} exceeds the hard limit {limit}"),
            Error::FieldTooLarge { p, e } => {
                write!(f, "field order {p}^{e} exceeds the cap 2^20")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidDigits(msg) => write!(f, "invalid digit vector: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
