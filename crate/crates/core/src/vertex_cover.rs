//! Parameterization by the vertex cover number `τ`: guess the part of the
//! solution inside a minimum vertex cover `C`, then complete it greedily
//! from the independent set `V ∖ C`. `O*(2^τ)` time, polynomial space.

use itertools::Itertools;

use crate::error::{check_k, SolveError};
use crate::exec::{map_fold, Exec};
use crate::graph::{Graph, VertexSet};
use crate::problem::{pick_best, Method, ProblemSpec, Solution, Value};

/// Minimum vertex cover by iterative deepening over the two-way branching
/// "one endpoint of the first uncovered edge is in the cover".
pub fn min_vertex_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new(g.n());
    for budget in 0..=g.n() {
        if extend_cover(g, &mut cover, budget) {
            return cover;
        }
    }
    unreachable!("the whole vertex set is a cover")
}

fn extend_cover(g: &Graph, cover: &mut VertexSet, budget: usize) -> bool {
    let open = g.edges().iter().find(|&&(u, v)| !cover.contains(u) && !cover.contains(v));
    let Some(&(u, v)) = open else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for w in [u, v] {
        cover.insert(w);
        if extend_cover(g, cover, budget - 1) {
            return true;
        }
        cover.remove(w);
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VcStats {
    pub tau: usize,
    /// Subsets `X ⊆ C` with `|X| ≤ min(k, τ)` that were examined.
    pub subsets_examined: u64,
}

/// Exact optimum for any local problem via a minimum vertex cover.
///
/// For a guess `X ⊆ C`, adding an outside vertex `u` changes the value by
/// `(α1 − α2)·|E(u, X)| + α2·|E(u, C ∖ X)|` independently of the other
/// outside vertices, so the best `k − |X|` scores complete `X` optimally.
pub fn solve_vc(spec: &ProblemSpec, g: &Graph, k: usize, exec: &Exec) -> Result<(Solution, VcStats), SolveError> {
    check_k(k, g.n())?;
    let cover = min_vertex_cover(g);
    let cover_list = cover.to_vec();
    let outside = cover.complement().to_vec();
    let tau = cover_list.len();
    let goal = spec.goal();

    // work items: (size of X, index in cover_list of its smallest member)
    let mut items: Vec<(usize, Option<usize>)> = vec![(0, None)];
    for j in 1..=k.min(tau) {
        items.extend((0..=tau - j).map(|first| (j, Some(first))));
    }

    let (best, examined) = exec.install(|| {
        map_fold(
            exec.is_parallel(),
            &items,
            |&(j, first)| {
                let mut best: Option<Solution> = None;
                let mut examined = 0u64;
                let mut visit = |picked: &[usize]| {
                    examined += 1;
                    if k - picked.len() > outside.len() {
                        return;
                    }
                    let candidate = complete(spec, g, &cover, &outside, picked, k - picked.len());
                    best = pick_best(goal, best.take(), Some(candidate));
                };
                match first {
                    None => visit(&[]),
                    Some(f) => {
                        for rest in (f + 1..tau).combinations(j - 1) {
                            let picked: Vec<usize> = std::iter::once(f).chain(rest).map(|i| cover_list[i]).collect();
                            visit(&picked);
                        }
                    }
                }
                (best, examined)
            },
            (None, 0u64),
            |(acc, total), (item, count)| (pick_best(goal, acc, item), total + count),
        )
    });
    let solution = best.expect("k <= n leaves at least one feasible guess");
    Ok((solution, VcStats { tau, subsets_examined: examined }))
}

fn complete(
    spec: &ProblemSpec,
    g: &Graph,
    cover: &VertexSet,
    outside: &[usize],
    picked: &[usize],
    need: usize,
) -> Solution {
    let n = g.n();
    let guess = VertexSet::from_slice(n, picked);
    let (w1, w2) = (spec.weight_inner(), spec.weight_cut());
    let mut scored: Vec<(Value, usize)> = outside
        .iter()
        .map(|&u| {
            let into_guess = g.degree_into(u, &guess) as i64;
            let into_rest = g.degree_into(u, cover) as i64 - into_guess;
            (Value((w1 - w2) * into_guess + w2 * into_rest), u)
        })
        .collect();
    scored.sort_by(|a, b| spec.goal().rank(a.0, b.0).then(a.1.cmp(&b.1)));
    let chosen = &scored[..need];

    let completion = VertexSet::from_slice(n, &chosen.iter().map(|&(_, u)| u).collect::<Vec<_>>());
    assert_eq!(g.edges_within(&completion), 0, "completion vertices must be independent");
    let predicted = spec.value(g, &guess) + chosen.iter().map(|&(s, _)| s).sum::<Value>();

    let mut vertices = guess;
    vertices.union_with(&completion);
    let solution = Solution::evaluate(spec, g, vertices, Method::VertexCover);
    debug_assert_eq!(solution.value, predicted);
    solution
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{binomial, brute_force_opt};
    use crate::problem::Rational;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn is_cover(g: &Graph, c: &VertexSet) -> bool {
        g.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v))
    }

    #[test]
    fn cover_examples() {
        assert_eq!(min_vertex_cover(&star(3)).to_vec(), vec![0]);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = min_vertex_cover(&k3);
        assert_eq!(c.len(), 2);
        assert!(is_cover(&k3, &c));
        assert!(min_vertex_cover(&Graph::empty(4)).is_empty());
    }

    #[test]
    fn cover_is_minimum_on_cycles() {
        for n in 3..9 {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let g = Graph::new(n, &edges).unwrap();
            let c = min_vertex_cover(&g);
            assert!(is_cover(&g, &c));
            assert_eq!(c.len(), n.div_ceil(2));
        }
    }

    #[test]
    fn solve_examples() {
        let spec = ProblemSpec::max_cut();
        let (sol, stats) = solve_vc(&spec, &star(3), 1, &Exec::serial()).unwrap();
        assert_eq!(sol.vertices.to_vec(), vec![0]);
        assert_eq!(spec.to_rational(sol.value), Rational::from_integer(3));
        assert_eq!(stats.tau, 1);

        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let spec = ProblemSpec::min_cut();
        let (sol, _) = solve_vc(&spec, &k3, 2, &Exec::serial()).unwrap();
        assert_eq!(spec.to_rational(sol.value), Rational::from_integer(2));

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let spec = ProblemSpec::coverage();
        let (sol, _) = solve_vc(&spec, &p4, 2, &Exec::serial()).unwrap();
        assert_eq!(sol.value, brute_force_opt(&spec, &p4, 2).unwrap().value);
        assert_eq!(spec.to_rational(sol.value), Rational::from_integer(3));
    }

    #[test]
    fn examined_subset_count() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        for k in 0..=6 {
            let (_, stats) = solve_vc(&ProblemSpec::densest(), &g, k, &Exec::serial()).unwrap();
            let expected: u128 = (0..=k.min(stats.tau)).map(|j| binomial(stats.tau, j)).sum();
            assert_eq!(stats.subsets_examined as u128, expected);
        }
    }
}
