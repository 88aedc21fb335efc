//! Exhaustive k-subset search. Deliberately unclever: every other solver is
//! checked against it.

use itertools::Itertools;

use crate::error::{check_k, SolveError};
use crate::exec::{map_fold, Exec};
use crate::graph::{Graph, VertexSet};
use crate::problem::{pick_best, Decision, Method, ProblemSpec, Solution, Value};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub budget: u128,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET }
    }
}

impl Oracle {
    pub fn with_budget(budget: u128) -> Self {
        Oracle { budget }
    }

    /// Optimum over all k-subsets; the lexicographically smallest optimal set.
    pub fn optimum(&self, spec: &ProblemSpec, g: &Graph, k: usize, exec: &Exec) -> Result<Solution, SolveError> {
        let n = g.n();
        check_k(k, n)?;
        let subsets = binomial(n, k);
        if subsets > self.budget {
            return Err(SolveError::BudgetExceeded { n, k, subsets, budget: self.budget });
        }
        if k == 0 {
            return Ok(Solution::evaluate(spec, g, VertexSet::new(n), Method::Oracle));
        }
        let goal = spec.goal();
        // one work item per smallest member; items scan in lexicographic order
        let firsts: Vec<usize> = (0..=n - k).collect();
        let best = exec.install(|| {
            map_fold(
                exec.is_parallel(),
                &firsts,
                |&first| {
                    let mut best: Option<Solution> = None;
                    for rest in (first + 1..n).combinations(k - 1) {
                        let mut set = VertexSet::new(n);
                        set.insert(first);
                        for v in rest {
                            set.insert(v);
                        }
                        let value = spec.value(g, &set);
                        if best.as_ref().is_none_or(|b| goal.better(value, b.value)) {
                            best = Some(Solution { vertices: set, value, method: Method::Oracle });
                        }
                    }
                    best
                },
                None,
                |acc, item| pick_best(goal, acc, item),
            )
        });
        Ok(best.expect("k <= n guarantees a feasible set"))
    }

    /// Is there a k-set whose value meets `p` under the spec's goal?
    pub fn decide(
        &self,
        spec: &ProblemSpec,
        g: &Graph,
        k: usize,
        p: Value,
        exec: &Exec,
    ) -> Result<Decision, SolveError> {
        let best = self.optimum(spec, g, k, exec)?;
        Ok(if spec.goal().meets(best.value, p) { Decision::Yes(best) } else { Decision::No })
    }
}

/// [`Oracle::optimum`] with the default budget, serially.
pub fn brute_force_opt(spec: &ProblemSpec, g: &Graph, k: usize) -> Result<Solution, SolveError> {
    Oracle::default().optimum(spec, g, k, &Exec::serial())
}

/// [`Oracle::decide`] with the default budget, serially.
pub fn decide(spec: &ProblemSpec, g: &Graph, k: usize, p: Value) -> Result<Decision, SolveError> {
    Oracle::default().decide(spec, g, k, p, &Exec::serial())
}
