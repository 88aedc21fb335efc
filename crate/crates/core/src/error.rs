use thiserror::Error;

use crate::treewidth::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("k = {k} exceeds the number of vertices n = {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("spec {0} is not degrading; use alg2 instead")]
    NotDegrading(String),
    #[error("exhaustive search over C({n}, {k}) = {subsets} subsets exceeds the budget of {budget}")]
    BudgetExceeded { n: usize, k: usize, subsets: u128, budget: u128 },
    #[error("threshold p = {p} exceeds k = {k}; use the p+k algorithm instead")]
    ThresholdExceedsK { p: i64, k: usize },
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    EpsilonOutOfRange(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(Violation),
}

pub(crate) fn check_k(k: usize, n: usize) -> Result<(), SolveError> {
    if k > n {
        Err(SolveError::KTooLarge { k, n })
    } else {
        Ok(())
    }
}
