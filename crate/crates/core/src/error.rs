use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition into three positive weakly decreasing parts: {0:?}")]
    InvalidPartition([u64; 3]),
    #[error("partition {0:?} exceeds the supported height 2^56")]
    TooLarge([u64; 3]),
    #[error("lattice point {0:?} is not a partition into three positive parts")]
    InvalidSignedPartition([i64; 3]),
    #[error("box quotient has a negative entry: {0:?}")]
    NegativeQuotient([i64; 3]),
    #[error("{0:?} is not a lattice point of the fundamental parallelepiped")]
    NotFundamental([i64; 3]),
    #[error("unsupported modulus {0}: expected a prime congruent to ±1 mod 6")]
    UnsupportedModulus(u64),
    #[error("no square root of -3 modulo {0}")]
    NoSquareRoot(u64),
    #[error("height {n} is not in a witnessed residue class modulo 6·{m}")]
    NonQualifyingHeight { n: u64, m: u64 },
    #[error("box remainder {0:?} has no placement in this rectangle plan")]
    NoPlacement([i64; 3]),
    #[error("no triangle arrangement meets the required rectangle dimensions: {0}")]
    NoArrangement(String),
    #[error("cover check failed: {0}")]
    CoverCheck(String),
    #[error("affine map is not injective on triangles")]
    NotInjective,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}
