use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction
    #[error("p = {0} is not an odd prime")]
    NonPrimeP(u64),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("modulus is reducible over Z_{0}")]
    ReducibleModulus(u64),
    #[error("field of order {0}^{1} exceeds the supported size 2^40")]
    FieldTooLarge(u64, u32),

    // element-level
    #[error("element belongs to a different field")]
    ForeignElement,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("operation requires a nonzero input")]
    ZeroInput,
    #[error("e = {e} does not divide h = {h}")]
    EDoesNotDivideH { e: u32, h: u32 },
    #[error("element is not a (p^e+1)-th power")]
    NotInE,
    #[error("no element of order {0} in the requested group")]
    NoSuchOrder(u64),
    #[error("norm equation with gcd {0} needs a discrete-log table")]
    NoDlogTable(u64),

    // matrices
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("column counts differ ({0} vs {1})")]
    ColsMismatch(usize, usize),
    #[error("generator matrix is rank deficient (rank {rank}, rows {rows})")]
    RankDeficient { rank: usize, rows: usize },

    // codes
    #[error("evaluation points are not distinct")]
    DuplicatePoints,
    #[error("multiplier zero at coordinate {0}")]
    ZeroMultiplier(usize),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("length mismatch ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("code length {0} exceeds the exact-distance guard {1}")]
    TooLargeForExact(usize, usize),
    #[error("operation not supported for extended codes")]
    ExtendedUnsupported,

    // constructions
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("norm equation v^(p^e+1) = c failed at coordinate {0}")]
    NormEquationFailed(usize),
    #[error("h/e must be an odd integer (h = {h}, e = {e})")]
    HOverENotOdd { h: u32, e: u32 },
    #[error("seed witness fails at coordinate {0}")]
    SeedInvalidWitness(usize),
    #[error("gcd(p^e+1, p^h-1) = {0}, expected 2")]
    GcdNotTwo(u64),
    #[error("an extended seed is required")]
    ExtendedSeedRequired,
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),

    // tables
    #[error("invalid ranges: {0}")]
    InvalidRanges(String),

    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
