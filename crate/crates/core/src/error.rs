//! Error type shared across the crate.

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("point set must contain at least one point")]
    EmptyPointSet,

    #[error("symmetric power must be at least 1")]
    ZeroPower,

    #[error("generator {index} has order {order}, outside 1..={max}")]
    GeneratorOrder { index: usize, order: u32, max: u32 },

    #[error("punctured surface needs at least one puncture")]
    NoPunctures,

    #[error("{0} pairs degrees by Poincare duality, so the ambient space must be a closed surface")]
    ClosedSurfaceRequired(&'static str),

    #[error("arrangement has no generators")]
    EmptyArrangement,

    #[error("expected exactly two generators, found {0}")]
    NotTwoGenerators(usize),

    #[error("inclusion-exclusion supports at most 16 generators, found {0}")]
    TooManyGenerators(usize),

    #[error("invalid prime list: {0}")]
    BadPrimes(String),

    #[error("matrices disagree on row count: {left} vs {right}")]
    RowMismatch { left: usize, right: usize },
}
