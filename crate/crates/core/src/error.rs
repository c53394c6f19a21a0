use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    InvalidPrime(u64),
    #[error("precision k must be at least 1")]
    InvalidPrecision,
    #[error("p^k = {0} is too large for the residue representation")]
    PrecisionTooLarge(u64),
    #[error("root order {e} must be positive and prime to p = {p}")]
    BadRootOrder { e: u64, p: u64 },
    #[error("residue degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
    #[error("{n} does not divide p^m - 1 = {order}")]
    NoRootOfUnity { n: u64, order: u64 },
    #[error("residue {0} is zero mod p")]
    ZeroResidue(i64),
    #[error("modulus {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("ring with p^m - 1 = {order} does not contain the phi(N) = {needed}-th roots of unity")]
    RingTooSmall { order: u64, needed: u64 },
    #[error("{d} is not a unitary divisor of {n}")]
    NotUnitaryDivisor { d: u64, n: u64 },
    #[error("invalid character specifier `{spec}`: {reason}")]
    CharacterSpec { spec: String, reason: String },
    #[error("level N = {0} is below 4")]
    LevelTooSmall(u64),
    #[error("{a} is not a unit mod {n}")]
    NotAUnit { a: i64, n: u64 },
    #[error("c = {c} and d = {d} must exceed 1 and be prime to 6N = {six_n}")]
    BadCd { c: u64, d: u64, six_n: u64 },
    #[error("({u}, {v}) is not a generator of this symbol space")]
    NotASymbol { u: i64, v: i64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("submodule is not contained in the ambient module")]
    NotContained,
    #[error("p divides phi(N) = {0}")]
    PDividesPhiN(u64),
    #[error("p divides M = {0}")]
    PDividesM(u64),
    #[error("p divides phi(M) = {0}")]
    PDividesPhiM(u64),
    #[error("character must be even")]
    OddCharacter,
    #[error("character modulus {got} does not match level {expected}")]
    CharacterModulus { expected: u64, got: u64 },
    #[error("g = {g} and h = {h} are not coprime divisors of {n}")]
    BadDivisors { g: u64, h: u64, n: u64 },
    #[error("invalid quotient: {0}")]
    InvalidQuotient(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
