//! Opt-in parallelism. Solvers receive an [`Exec`] and fan out sibling work
//! only when it reports more than one worker; reductions always use the
//! deterministic best-first order, so serial and parallel runs agree.

use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exec {
    threads: usize,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::serial()
    }
}

impl Exec {
    pub fn serial() -> Self {
        Exec { threads: 1 }
    }

    pub fn with_threads(threads: usize) -> Self {
        Exec { threads: threads.max(1) }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn is_parallel(&self) -> bool {
        self.threads > 1
    }

    /// Runs `f` inside a dedicated pool when parallel.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.is_parallel() {
            rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build()
                .expect("failed to build worker pool")
                .install(f)
        } else {
            f()
        }
    }
}

/// Maps `items` (in parallel when asked) and folds the results in item
/// order, so the outcome never depends on scheduling.
pub(crate) fn map_fold<T, R, A>(
    parallel: bool,
    items: &[T],
    map: impl Fn(&T) -> R + Sync + Send,
    init: A,
    fold: impl FnMut(A, R) -> A,
) -> A
where
    T: Sync,
    R: Send,
{
    if parallel {
        let results: Vec<R> = items.par_iter().map(map).collect();
        results.into_iter().fold(init, fold)
    } else {
        items.iter().map(map).fold(init, fold)
    }
}
