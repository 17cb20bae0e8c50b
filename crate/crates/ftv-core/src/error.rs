use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a fan matrix: {0}")]
    NotAFanMatrix(String),
    #[error("zero vector has no primitive reduction")]
    ZeroVector,
    #[error("fan not complete: framing polytope is unbounded")]
    FanNotComplete,
    #[error("degenerate point set: affine hull has dimension {affine_dim}, expected {expected}")]
    Degenerate { affine_dim: usize, expected: usize },
    #[error("polytope has no lattice points")]
    NoLatticePoints,
    #[error("origin not interior")]
    OriginNotInterior,
    #[error("invalid framing: {0}")]
    InvalidFraming(String),
    #[error("block {block} not in normal form (0..0, 1..1, delta, 0..0)")]
    NotNormalForm { block: usize },
    #[error("vertex {vertex} of the dual polytope is not primitive although assumption (A) holds")]
    NonPrimitiveVertex { vertex: usize },
    #[error("unsupported dual-framing regime: block {block} has delta = {delta} > 1")]
    UnsupportedDualFraming { block: usize, delta: String },
    #[error("not a fan matrix of a weighted projective quotient: {0}")]
    NotWpsQuotient(String),
    #[error("{0} is not in I^W, the set of columns outside W")]
    SubsetOutOfRange(String),
    #[error("{size} exceptional columns give 2^{size} models; pass an explicit subset list")]
    SizeGuard { size: usize },
    #[error("lattice scan coordinates exceed the machine-integer fast path")]
    Overflow,
}
