use crate::objective::FunctionId;
use thiserror::Error;

/// Errors raised by objective construction, evaluation, and optimizer runs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{op} is not available for {id}")]
    Unsupported { op: &'static str, id: FunctionId },

    #[error("evaluation budget of {max_evals} is exhausted")]
    BudgetExhausted { max_evals: u64 },

    #[error("a population of {pop_size} does not fit in the remaining budget of {remaining} evaluations")]
    BudgetTooSmall { pop_size: usize, remaining: u64 },

    #[error("{algo} needs a population of at least {min}, got {got}")]
    PopulationTooSmall {
        algo: &'static str,
        min: usize,
        got: usize,
    },
}
