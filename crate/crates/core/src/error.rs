use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("mismatched moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
    #[error("Legendre symbol needs an odd prime modulus")]
    EvenModulus,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not in systematic form [I | A]")]
    NotSystematic,

    #[error("eta quotient has weight sum {0}, not divisible by 24")]
    FractionalExponent(i64),
    #[error("unsupported Eisenstein weight {0}")]
    UnsupportedWeight(u32),
    #[error("coefficient q^{needed} requested but series is known only below q^{order}")]
    TruncationTooSmall { needed: i64, order: i64 },
    #[error("series inversion needs a leading coefficient of +1 or -1")]
    NonUnitLeading,

    #[error("model is singular modulo {0}")]
    SingularReduction(u64),
    #[error("model is singular over the rationals")]
    SingularModel,
    #[error("invalid curve model: {0}")]
    InvalidModel(String),
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("no genus-one model stored for level {0}")]
    NoModelForLevel(u64),
    #[error("level {level} has bad reduction at {p}")]
    BadReduction { level: u64, p: u64 },
    #[error("trace {trace} violates the Hasse bound for p = {p}")]
    HasseViolation { trace: i64, p: u64 },

    #[error("cannot evaluate at the point at infinity")]
    InfinityEvaluation,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("(0, 0, 0) is not a projective point")]
    ZeroTriple,
    #[error("duplicate evaluation point {0}")]
    DuplicatePoint(String),
    #[error("evaluation point {0} lies in the divisor support")]
    SupportCollision(String),
    #[error("basis is empty")]
    EmptyBasis,
    #[error("enumeration of {0} codewords is too large")]
    TooLarge(String),
    #[error("MacWilliams transform produced a non-integral count")]
    NonIntegralResult,

    #[error("genus formula gave non-integral value {0}")]
    NonIntegralGenus(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{0} is not a perfect square")]
    NotASquare(u64),
}
