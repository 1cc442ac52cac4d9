use thiserror::Error;

use crate::element::ElementLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty family")]
    EmptyFamily,
    #[error("element outside ground set: {0}")]
    OutsideGround(ElementLabel),
    #[error("element outside ground set: position {0}")]
    PositionOutsideGround(usize),
    #[error("duplicate element in ground set: {0}")]
    DuplicateElement(ElementLabel),
    #[error("ground set has {0} elements; at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("family is not the basis set of a matroid")]
    NotAMatroid,
    #[error("ground sets not disjoint")]
    NotDisjoint,
    #[error("element {0} already in ground set")]
    AlreadyPresent(ElementLabel),
    #[error("expansion vector has length {got}, ground set has {expected} elements")]
    MisalignedAlpha { expected: usize, got: usize },
    #[error("expansion multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("label has no copy index: {0}")]
    NoCopyIndex(ElementLabel),
    #[error("rank {t} exceeds {n}")]
    RankTooLarge { t: usize, n: usize },
    #[error("blocks overlap or do not cover")]
    NotAPartition,
    #[error("graph not connected")]
    GraphNotConnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("sets have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("sequence length must be at least 2")]
    SequenceTooShort,
}

pub type Result<T> = std::result::Result<T, Error>;
