use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for {family}")]
    InvalidRank { family: &'static str, rank: usize },
    #[error("vector is not a root of the datum")]
    NotARoot,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("operation needs a quasi-split even GSpin datum")]
    NotQuasiSplit,
    #[error("case mismatch: {0}")]
    CaseMismatch(&'static str),
    #[error("invalid Weyl element: {0}")]
    InvalidWeylElement(&'static str),
    #[error("invalid weight: {0}")]
    InvalidWeight(&'static str),
    #[error("eigenvalues are not regular, alternant denominator vanishes")]
    SingularAlternant,
    #[error("SO(2k) characters need the last part of the weight to be zero")]
    NonzeroLastPart,
    #[error("oracle budget exceeded (rank {rank}, weight size {size})")]
    OracleBudgetExceeded { rank: usize, size: u64 },
    #[error("similitude value must be nonzero")]
    ZeroSimilitude,
    #[error("normalization needs a square root of the similitude value")]
    IrrationalNormalization,
    #[error("character value must be nonzero")]
    ZeroCharacterValue,
    #[error("parameter violates tgJg = mu J")]
    MembershipViolation,
    #[error("alpha^2 - a beta^2 does not equal chi_0")]
    NormMismatch,
    #[error("series constant term is not invertible")]
    NonUnitConstantTerm,
    #[error("residual power of q did not cancel")]
    NonCancellingQExponent,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("no unique normalization exponent validated")]
    UnresolvedNormalization,
}
