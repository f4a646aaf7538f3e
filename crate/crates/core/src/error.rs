use thiserror::Error;

use crate::dominance::SolutionId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("objective dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a solution needs at least 2 objectives, got {0}")]
    TooFewObjectives(usize),

    #[error("objective {index} of solution `{id}` is not finite")]
    NonFinite { id: SolutionId, index: usize },

    #[error("solution id `{0}` is already present")]
    DuplicateId(SolutionId),

    #[error("solution `{0}` is not present")]
    NotFound(SolutionId),

    #[error("front index {index} out of range (front count {fronts})")]
    IndexOutOfRange { index: usize, fronts: usize },

    #[error("tree navigation needs at least 2 fronts, found {0}")]
    TooFewFronts(usize),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid front profile: {0}")]
    InvalidProfile(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
