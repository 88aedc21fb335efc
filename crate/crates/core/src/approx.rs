//! Fixed-parameter approximation for max (k, n−k)-cut, and the exhaustive
//! regime of min (k, n−k)-cut.

use crate::branching::alg1;
use crate::error::{check_k, SolveError};
use crate::exec::Exec;
use crate::graph::{Graph, VertexSet};
use crate::oracle::Oracle;
use crate::problem::{Method, ProblemSpec, Rational, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApproxMode {
    GreedyTopK,
    ExactBranching,
    Exhaustive,
}

impl ApproxMode {
    pub fn name(self) -> &'static str {
        match self {
            ApproxMode::GreedyTopK => "greedy-top-k",
            ApproxMode::ExactBranching => "exact-branching",
            ApproxMode::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub solution: Solution,
    /// Ratio promised before looking at the solution.
    pub guarantee: Rational,
    pub mode: ApproxMode,
    /// Sum of the `k` largest degrees, an upper bound on any cut of `k`
    /// vertices.
    pub degree_bound: usize,
}

fn check_epsilon(epsilon: Rational) -> Result<(), SolveError> {
    if epsilon <= Rational::from_integer(0) || epsilon >= Rational::from_integer(1) {
        return Err(SolveError::EpsilonOutOfRange(epsilon.to_string()));
    }
    Ok(())
}

/// Vertices sorted by decreasing degree, smallest id first among ties.
fn by_degree(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// The `k` largest-degree vertices (smallest id among ties) and the sum `B`
/// of their degrees.
pub fn greedy_top_k(g: &Graph, k: usize) -> Result<(Solution, usize), SolveError> {
    check_k(k, g.n())?;
    let order = by_degree(g);
    let bound = order[..k].iter().map(|&v| g.degree(v)).sum();
    let set = VertexSet::from_slice(g.n(), &order[..k]);
    Ok((Solution::evaluate(&ProblemSpec::max_cut(), g, set, Method::GreedyTopK), bound))
}

/// True when `ε ≥ k²/Δ`, compared exactly. Never holds for an edgeless graph.
pub fn greedy_applies(g: &Graph, k: usize, epsilon: Rational) -> bool {
    let delta = g.max_degree();
    delta > 0 && epsilon * Rational::from_integer(delta as i64) >= Rational::from_integer((k * k) as i64)
}

/// With `ε ≥ k²/Δ` the `k` largest-degree vertices cut at least `B − k²`
/// edges against a ceiling of `B`; otherwise `Δ < k²/ε` and exact greedy
/// branching is itself FPT.
pub fn approx_max_cut(g: &Graph, k: usize, epsilon: Rational, exec: &Exec) -> Result<ApproxResult, SolveError> {
    check_k(k, g.n())?;
    check_epsilon(epsilon)?;
    let (greedy, degree_bound) = greedy_top_k(g, k)?;
    if greedy_applies(g, k, epsilon) {
        let guarantee = if degree_bound == 0 {
            Rational::from_integer(1)
        } else {
            Rational::from_integer(1) - Rational::new((k * k) as i64, degree_bound as i64)
        };
        return Ok(ApproxResult { solution: greedy, guarantee, mode: ApproxMode::GreedyTopK, degree_bound });
    }
    let (solution, _) = alg1(&ProblemSpec::max_cut(), g, k, exec)?;
    Ok(ApproxResult { solution, guarantee: Rational::from_integer(1), mode: ApproxMode::ExactBranching, degree_bound })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinCutApprox {
    Solved(ApproxResult),
    /// `2^k < n`: only the randomized regime applies, which is not provided.
    Unsupported {
        n: usize,
        k: usize,
    },
}

/// Exact answer by exhaustive enumeration when `k ≥ log2 n`.
pub fn approx_min_cut(g: &Graph, k: usize, oracle: &Oracle, exec: &Exec) -> Result<MinCutApprox, SolveError> {
    let n = g.n();
    check_k(k, n)?;
    let exhaustive = k >= usize::BITS as usize || (1usize << k) >= n;
    if !exhaustive {
        return Ok(MinCutApprox::Unsupported { n, k });
    }
    let solution = oracle.optimum(&ProblemSpec::min_cut(), g, k, exec)?;
    let (_, degree_bound) = greedy_top_k(g, k)?;
    Ok(MinCutApprox::Solved(ApproxResult {
        solution,
        guarantee: Rational::from_integer(1),
        mode: ApproxMode::Exhaustive,
        degree_bound,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_opt;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn star_uses_greedy_mode() {
        let r = approx_max_cut(&star(10), 2, half(), &Exec::serial()).unwrap();
        assert_eq!(r.mode, ApproxMode::GreedyTopK);
        assert_eq!(r.degree_bound, 11);
        assert_eq!(r.guarantee, Rational::new(7, 11));
        assert_eq!(r.solution.vertices.to_vec(), vec![0, 1]);
        assert_eq!(r.solution.value.0, 9 * ProblemSpec::max_cut().scale());
    }

    #[test]
    fn small_epsilon_is_exact() {
        let g = star(10);
        let r = approx_max_cut(&g, 2, Rational::new(1, 100), &Exec::serial()).unwrap();
        assert_eq!(r.mode, ApproxMode::ExactBranching);
        assert_eq!(r.guarantee, Rational::from_integer(1));
        assert_eq!(r.solution.value, brute_force_opt(&ProblemSpec::max_cut(), &g, 2).unwrap().value);
    }

    #[test]
    fn single_vertex_greedy_is_optimal() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = approx_max_cut(&g, 1, half(), &Exec::serial()).unwrap();
        assert_eq!(r.mode, ApproxMode::GreedyTopK);
        assert_eq!(r.solution.vertices.to_vec(), vec![1]);
        assert_eq!(r.solution.value, brute_force_opt(&ProblemSpec::max_cut(), &g, 1).unwrap().value);
    }

    #[test]
    fn mode_boundary_is_inclusive() {
        // Δ = 4, k = 2: k²/Δ = 1 is out of range, k = 1 gives 1/4
        let g = star(4);
        assert!(greedy_applies(&g, 1, Rational::new(1, 4)));
        assert!(!greedy_applies(&g, 1, Rational::new(1, 5)));
        assert!(!greedy_applies(&Graph::empty(3), 1, half()));
    }

    #[test]
    fn epsilon_must_be_a_proper_fraction() {
        for eps in [Rational::from_integer(0), Rational::from_integer(1), Rational::new(3, 2)] {
            assert!(matches!(approx_max_cut(&star(3), 1, eps, &Exec::serial()), Err(SolveError::EpsilonOutOfRange(_))));
        }
    }

    #[test]
    fn min_cut_regimes() {
        let oracle = Oracle::default();
        let cube = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let MinCutApprox::Solved(r) = approx_min_cut(&cube, 3, &oracle, &Exec::serial()).unwrap() else {
            panic!("expected the exhaustive regime");
        };
        assert_eq!(r.mode, ApproxMode::Exhaustive);
        assert_eq!(r.solution.value, brute_force_opt(&ProblemSpec::min_cut(), &cube, 3).unwrap().value);

        assert_eq!(
            approx_min_cut(&Graph::empty(1024), 2, &oracle, &Exec::serial()).unwrap(),
            MinCutApprox::Unsupported { n: 1024, k: 2 }
        );

        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let MinCutApprox::Solved(r) = approx_min_cut(&c4, 2, &oracle, &Exec::serial()).unwrap() else {
            panic!("expected the exhaustive regime");
        };
        assert_eq!(ProblemSpec::min_cut().to_rational(r.solution.value), Rational::from_integer(2));
    }
}
