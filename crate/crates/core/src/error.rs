use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("divisor is not monic (leading coefficient {0})")]
    NonMonicDivisor(BigInt),

    #[error("polynomials are not coprime: gcd has degree {0}")]
    NotCoprime(usize),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero has no multiplicative inverse")]
    DivisionByZero,

    #[error("zero is not an element of the multiplicative group")]
    ZeroElement,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("element is not in the subgroup of order Phi_{0}(q)")]
    NotInTorus(u64),

    #[error("integrality violated: {0}")]
    NotIntegral(String),

    #[error("field of size {q}^{n} exceeds the supported ceiling of 2^{max_bits}")]
    FieldTooLarge { q: String, n: usize, max_bits: u64 },
}

impl Error {
    /// True for failures of mathematical preconditions or resource ceilings,
    /// as opposed to malformed arguments.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime(_)
                | Error::DivisionByZero
                | Error::ZeroElement
                | Error::NotInTorus(_)
                | Error::NotIntegral(_)
                | Error::FieldTooLarge { .. }
        )
    }
}
