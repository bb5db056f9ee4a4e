use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed slope {0:?}: expected inf or [+-]digits[/digits]")]
    SlopeSyntax(String),
    #[error("zero denominator in slope {0:?}")]
    ZeroDenominator(String),
    #[error("{0} requires a finite argument")]
    InfiniteArgument(&'static str),
    #[error("multiplier k must be at least 1")]
    NonPositiveMultiplier,
    #[error("Seifert slope {index} is inf; a fiber filled along the fiber slope is not allowed")]
    InfiniteSeifertSlope { index: usize },
    #[error("determinant ±1 required, got {0}")]
    GluingDeterminant(BigInt),
    #[error("daughter {index} is a solid torus; absorb it into the parent Seifert slopes instead")]
    SolidTorusDaughter { index: usize },
    #[error("absorbing a solid torus produced the fiber slope inf; the result is not prime")]
    NonPrimeAbsorption,
    #[error("rational longitude unknown: daughter {index} is given only by its interval")]
    LongitudeUnknown { index: usize },
    #[error("at least two exceptional fibers are required, got {0}")]
    TooFewFibers(usize),
    #[error("the index set must contain 0")]
    JWithoutZero,
    #[error("{0}")]
    SlopeForm(String),
    #[error("at least one slope is required")]
    NoSlopes,
    #[error("index {index} out of range for {len} fibers")]
    FiberIndex { index: usize, len: usize },
    #[error("cable ({p}, {q}) is excluded: {reason}")]
    DiscardedCable {
        p: i64,
        q: i64,
        reason: &'static str,
    },
    #[error("search bound {0} exceeds the supported range")]
    SearchBoundTooLarge(BigInt),
    #[error("the meridional filling is not an L-space: inf lies outside [{lower}, {upper}]")]
    AmbientNotLSpace { lower: String, upper: String },
    #[error("interval has no endpoints: {0}")]
    NotABracket(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("{path}: {message}")]
    Document { path: String, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
