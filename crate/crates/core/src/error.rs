use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("characteristic hazard: prime {prime} does not exceed degree {degree}")]
    CharacteristicHazard { prime: u32, degree: u32 },

    #[error("genericity failure: {0}")]
    GenericityFailure(String),

    #[error("malformed h-vector: {0}")]
    MalformedHVector(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("unsupported case r={r}, m={m}: no closed form available")]
    UnsupportedCase { r: u32, m: u32 },

    #[error("Betti table has an empty module")]
    EmptyTable,

    #[error("Hilbert function of r={r}, m={m} did not stabilize by degree {cap}")]
    DegreeCap { r: u32, m: u32, cap: u32 },
}
