use thiserror::Error;

use crate::algebra::Index;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {weight} is not dominant: entry {index} is smaller than entry {next}", next = index + 1)]
    NotDominant { weight: String, index: Index },
    #[error("weight entry at index {index} is negative ({value})")]
    NegativeEntry { index: Index, value: i64 },
    #[error("weights belong to different signatures (m = {left} and m = {right})")]
    MixedSignature { left: usize, right: usize },
    #[error("malformed weight text {text:?}: {reason}")]
    WeightSyntax { text: String, reason: String },
    #[error("malformed rational {0:?}")]
    RationalSyntax(String),
    #[error("index {index} lies below the first index {first}")]
    IndexBelowRange { index: Index, first: Index },
    #[error("index {index} lies above the truncation {last}")]
    IndexAboveTruncation { index: Index, last: Index },
    #[error("operator shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("operator is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("tensor slot {slot} does not carry the operator's space")]
    SlotMismatch { slot: usize },
    #[error("module dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("vector is not homogeneous in weight and parity")]
    NotHomogeneous,
    #[error("vector is zero")]
    ZeroVector,
    #[error("invariant of order {q} does not act as a scalar (entry {row},{col})")]
    NotScalar { q: usize, row: usize, col: usize },
    #[error("order-{q} invariant differs between truncations {r} and {r_next}: {left} vs {right}")]
    Unstable { q: usize, r: usize, r_next: usize, left: String, right: String },
    #[error("characteristic roots at indices {i} and {j} collide and the formula has a pole")]
    DegenerateRoots { i: Index, j: Index },
    #[error("closed-form denominator vanishes at index {index}")]
    SingularDenominator { index: Index },
    #[error("truncation {r} is below the required {required}")]
    TruncationTooSmall { r: usize, required: usize },
    #[error("weight {weight} does not occur as a highest weight in tensor powers of the vector module of gl({m}/{n})")]
    NotRealizable { weight: String, m: usize, n: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
}
