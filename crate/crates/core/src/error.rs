use thiserror::Error;

/// Errors raised by the library. Every precondition failure has its own
/// variant so callers (and the CLI) can report it without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside the supported range 2..=24")]
    DegreeOutOfRange(u32),
    #[error("no shipped modulus for degree {0}")]
    MissingModulus(u32),
    #[error("modulus {modulus:#x} is reducible over F_2")]
    ReducibleModulus { modulus: u32 },
    #[error("x is not primitive modulo {modulus:#x}")]
    NotPrimitive { modulus: u32 },
    #[error("value {bits:#x} is not an element of GF(2^{degree})")]
    ElementOutOfRange { bits: u64, degree: u32 },
    #[error("context mismatch: GF(2^{left}) vs GF(2^{right})")]
    ContextMismatch { left: u32, right: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("subfield degree {k} does not divide {n}")]
    NotADivisor { k: u32, n: u32 },
    #[error("elements are linearly dependent over F_2")]
    LinearlyDependent,
    #[error("element {bits:#x} is not in the degree-{k} subfield")]
    NotInSubfield { bits: u32, k: u32 },
    #[error("exponent {t} is not coprime with 2^{n}-1")]
    ExponentNotCoprime { t: u64, n: u32 },
    #[error("extension degree {0} must be even")]
    OddDegree(u32),
    #[error("{what} exceeds the desk-scale guard; set HBF_GUARD_OVERRIDE=1 to lift it")]
    GuardExceeded { what: String },
    #[error("table has {got} entries, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("word {word:#x} does not fit in {k} bits")]
    WordOutOfRange { word: u64, k: u32 },
    #[error("k exceeds m: dimension k={k} is larger than m={m}")]
    DimensionExceedsM { k: u32, m: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u32, got: u32 },
    #[error("the zero combination is not a component function")]
    ZeroCombination,
    #[error("character values are inconsistent: coefficient of {element:#x} is not an integer")]
    NonIntegralInversion { element: u32 },
    #[error("symmetry precondition failed: f(gamma^(2^m+1) x) = f(x) and f(0) = 0 must hold")]
    SymmetryFailed,
    #[error("construction needs m >= 2, got n={0}")]
    HalfDegreeTooSmall(u32),
    #[error("u0 must lie in U \\ {{1}}")]
    InvalidU0,
    #[error("h is not balanced")]
    NotBalanced,
    #[error("h(0) != 0")]
    NonZeroAtZero,
    #[error("Dickson index {0} exceeds the guard 2^20")]
    DicksonIndexTooLarge(u64),
    #[error("gcd(r, 2^(2m)-1) != 1 (r={r}, gcd={gcd})")]
    DicksonNotPermutation { r: u64, gcd: u64 },
    #[error("gcd(d, 2^m-1) != 1 (d={d}, m={m})")]
    DecimationNotCoprime { d: u64, m: u32 },
    #[error("crosscorrelation for d={d} is {distinct}-valued, a three-valued decimation is required")]
    NotThreeValued { d: u64, distinct: usize },
    #[error("no lambda in F_(2^m)^* gives a hyper-bent function (u0={u0:#x}, d={d})")]
    SearchExhausted { u0: u32, d: u64 },
    #[error("{count} functions exceed the enumeration cap {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
