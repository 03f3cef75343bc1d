use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{n} exceeds the table cap of 2^20 elements")]
    TooLarge { p: u32, n: u32 },
    #[error("defining polynomial must be monic of degree {expected}")]
    BadDefiningPoly { expected: u32 },
    #[error("defining polynomial is not irreducible over GF({p})")]
    NotIrreducible { p: u32 },
    #[error("defining polynomial is irreducible but not primitive over GF({p})")]
    NotPrimitive { p: u32 },
    #[error("element code {code} does not belong to a field of order {order}")]
    FieldMismatch { code: u32, order: u32 },
    #[error("division by zero")]
    DivideByZero,
    #[error("GF({order}) is not a subfield of the ambient field")]
    NoSuchSubfield { order: u64 },
    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected {expected} basis elements, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("basis elements are linearly dependent over the base field")]
    LinearlyDependent,
    #[error("index {index} is out of range for a basis of size {m}")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("root exponent {0} appears more than once")]
    DuplicateRoot(u32),
    #[error("exponent {exponent} is out of range [0, {n})")]
    ExponentOutOfRange { exponent: u32, n: u32 },
    #[error("polynomial does not divide x^N - 1")]
    NotDivisor,
    #[error("code has dimension zero")]
    ZeroDimension,
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("subbasis must contain at least one element")]
    EmptyInclusion,
    #[error("problem size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no codeword with a minimal subbasis of size {0} exists")]
    NoSuchCodeword(usize),
    #[error("level {level} needs an exact minimum distance but brute force exceeds the cap")]
    LevelTooLarge { level: usize },
    #[error("no low-weight witness codeword found")]
    NoWitnessFound,
}

pub type Result<T> = std::result::Result<T, Error>;
