use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} exceeds the supported bound {bound}")]
    OutOfRange { value: u64, bound: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),

    #[error("gcd({a}, {m}) != 1")]
    NotCoprime { a: i64, m: i64 },

    #[error("(Z/{0}Z)^x is not cyclic")]
    NoPrimitiveRoot(u64),

    #[error("elements live in different rings (conductors {0} and {1})")]
    RingMismatch(u64, u64),

    #[error("ring of conductor {conductor} cannot represent {what}")]
    RingTooSmall { conductor: u64, what: String },

    #[error("{target} does not divide the conductor {conductor}")]
    NotADivisor { target: u64, conductor: u64 },

    #[error("element does not lie in the subfield Q(zeta_{0})")]
    NotInSubfield(u64),

    #[error("not a normal basis generator: {0}")]
    NotNormalBasis(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("{0} is not a power of two >= {1}")]
    NotPowerOfTwo(u64, u64),

    #[error("inconsistent character coordinates: {0}")]
    InconsistentCoords(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("moduli {0} and {1} differ")]
    ModulusMismatch(u64, u64),

    #[error("not a permutation of [0, {0}): {1}")]
    NotAPermutation(usize, String),

    #[error("malformed program: {0}")]
    Program(String),
}
