//! Standard-parameter algorithms for max and min (k, n−k)-cut, where the
//! parameter is the cut value `p` itself.

use itertools::Itertools;

use crate::branching::{alg1, alg2_restricted, Alg2Branching, BranchStats};
use crate::error::{check_k, SolveError};
use crate::exec::{map_fold, Exec};
use crate::graph::{Graph, VertexSet};
use crate::problem::{pick_best, Decision, Method, ProblemSpec, Solution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapOutcome {
    pub solution: Solution,
    /// Cut value after the initial split and after every swap.
    pub trace: Vec<usize>,
}

/// Starts from `{0, …, k−1}` and, while some outside vertex has no neighbor
/// inside, swaps it with an inside vertex having fewer than `r` neighbors
/// outside (`r` the minimum degree). Every swap strictly grows the cut, and
/// the final cut is at least `min{n − k, r·k}`.
pub fn swap_construct(g: &Graph, k: usize) -> Result<SwapOutcome, SolveError> {
    let n = g.n();
    check_k(k, n)?;
    let r = g.min_degree();
    let mut inside = VertexSet::from_slice(n, &(0..k).collect::<Vec<_>>());
    let mut cut = g.edges_crossing(&inside);
    let mut trace = vec![cut];
    loop {
        let lonely = (0..n).find(|&v| !inside.contains(v) && g.degree_into(v, &inside) == 0);
        let Some(v) = lonely else { break };
        let outside = inside.complement();
        let weak = inside.iter().find(|&u| g.degree_into(u, &outside) < r);
        let Some(u) = weak else { break };
        inside.remove(u);
        inside.insert(v);
        let next = g.edges_crossing(&inside);
        assert!(next > cut, "swap must strictly increase the cut ({cut} -> {next})");
        cut = next;
        trace.push(cut);
    }
    let solution = Solution::evaluate(&ProblemSpec::max_cut(), g, inside, Method::SwapConstruct);
    Ok(SwapOutcome { solution, trace })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// The swap construction already reaches `p`.
    Swap,
    /// A maximum-degree vertex alone on its side already reaches `p`.
    DegreeConstruct,
    /// Exact branching settled it.
    Exact,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Swap => "swap",
            Stage::DegreeConstruct => "degree-construct",
            Stage::Exact => "alg1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardOutcome {
    pub decision: Decision,
    pub decided_by: Stage,
    /// Every stage that ran, with the cut value it produced.
    pub trace: Vec<(Stage, usize)>,
}

/// Max (k, n−k)-cut with cut at least `p`: the two polynomial constructions
/// first, exact greedy branching only when both fall short.
pub fn max_cut_standard(g: &Graph, k: usize, p: i64, exec: &Exec) -> Result<StandardOutcome, SolveError> {
    let n = g.n();
    check_k(k, n)?;
    let spec = ProblemSpec::max_cut();
    let reaches = |s: &Solution| s.value.0 >= p * spec.scale();
    let mut trace = Vec::new();

    let swapped = swap_construct(g, k)?.solution;
    let cut = g.edges_crossing(&swapped.vertices);
    trace.push((Stage::Swap, cut));
    if reaches(&swapped) {
        return Ok(StandardOutcome { decision: Decision::Yes(swapped), decided_by: Stage::Swap, trace });
    }

    let delta = g.max_degree();
    if k >= 1 && delta <= n - k {
        let hub = (0..n).find(|&v| g.degree(v) == delta).expect("non-empty graph");
        let mut set = VertexSet::from_slice(n, &[hub]);
        let fill = (0..n).filter(|&u| u != hub && !g.has_edge(hub, u)).take(k - 1);
        for u in fill {
            set.insert(u);
        }
        debug_assert_eq!(set.len(), k);
        let built = Solution::evaluate(&spec, g, set, Method::DegreeConstruct);
        let cut = g.edges_crossing(&built.vertices);
        debug_assert!(cut >= delta);
        trace.push((Stage::DegreeConstruct, cut));
        if reaches(&built) {
            return Ok(StandardOutcome { decision: Decision::Yes(built), decided_by: Stage::DegreeConstruct, trace });
        }
    }

    let (best, _) = alg1(&spec, g, k, exec)?;
    trace.push((Stage::Exact, g.edges_crossing(&best.vertices)));
    let decision = if reaches(&best) { Decision::Yes(best) } else { Decision::No };
    Ok(StandardOutcome { decision, decided_by: Stage::Exact, trace })
}

/// Min (k, n−k)-cut with cut at most `p`, FPT in `p + k`: vertices of
/// degree at least `k + p` can never be inside, and ALG2 runs with them
/// barred from the solution and from candidate sets.
pub fn min_cut_pk(g: &Graph, k: usize, p: i64, exec: &Exec) -> Result<(Decision, BranchStats), SolveError> {
    let n = g.n();
    check_k(k, n)?;
    if p < 0 {
        return Ok((Decision::No, BranchStats::default()));
    }
    let limit = k as i64 + p;
    let eligible_list: Vec<usize> = (0..n).filter(|&v| (g.degree(v) as i64) < limit).collect();
    if eligible_list.len() < k {
        return Ok((Decision::No, BranchStats::default()));
    }
    let eligible = VertexSet::from_slice(n, &eligible_list);
    let spec = ProblemSpec::min_cut();
    let (best, stats) = alg2_restricted(&spec, g, k, &eligible, Alg2Branching::Members, exec)?;
    let decision = match best {
        Some(s) if s.value.0 <= p * spec.scale() => Decision::Yes(Solution { method: Method::MinCutPk, ..s }),
        _ => Decision::No,
    };
    Ok((decision, stats))
}

/// Min (k, n−k)-cut with cut at most `p ≤ k` in `O*(n^p)`: guess the set of
/// inside vertices touching the cut, then fill up with whole components of
/// the rest by a knapsack over component sizes.
pub fn min_cut_np(g: &Graph, k: usize, p: i64, exec: &Exec) -> Result<Decision, SolveError> {
    let n = g.n();
    check_k(k, n)?;
    if p > k as i64 {
        return Err(SolveError::ThresholdExceedsK { p, k });
    }
    if p < 0 {
        return Ok(Decision::No);
    }
    let spec = ProblemSpec::min_cut();
    let max_boundary = p as usize;

    // work items: (boundary size, smallest boundary vertex)
    let mut items: Vec<(usize, Option<usize>)> = vec![(0, None)];
    for size in 1..=max_boundary.min(n) {
        items.extend((0..=n - size).map(|first| (size, Some(first))));
    }
    let best = exec.install(|| {
        map_fold(
            exec.is_parallel(),
            &items,
            |&(size, first)| {
                let mut best = None;
                match first {
                    None => best = fill_with_components(&spec, g, &VertexSet::new(n), k),
                    Some(f) => {
                        for rest in (f + 1..n).combinations(size - 1) {
                            let mut boundary = VertexSet::new(n);
                            boundary.insert(f);
                            for v in rest {
                                boundary.insert(v);
                            }
                            let found = fill_with_components(&spec, g, &boundary, k);
                            best = pick_best(spec.goal(), best, found);
                        }
                    }
                }
                best
            },
            None,
            |acc, item| pick_best(spec.goal(), acc, item),
        )
    });
    Ok(match best {
        Some(s) if s.value.0 <= p * spec.scale() => Decision::Yes(s),
        _ => Decision::No,
    })
}

fn fill_with_components(spec: &ProblemSpec, g: &Graph, boundary: &VertexSet, k: usize) -> Option<Solution> {
    if boundary.len() > k {
        return None;
    }
    let rest = boundary.complement();
    let components = g.components_within(&rest);
    let items: Vec<(usize, i64)> = components.iter().map(|c| (c.len(), g.edges_between(c, boundary) as i64)).collect();
    let picked = component_knapsack(&items, k - boundary.len())?;
    let mut set = boundary.clone();
    for i in picked {
        set.union_with(&components[i]);
    }
    Some(Solution::evaluate(spec, g, set, Method::MinCutNp))
}

/// Indices of items whose sizes sum to exactly `target` with the largest
/// total alpha, or `None` if no subset hits `target`.
pub fn component_knapsack(items: &[(usize, i64)], target: usize) -> Option<Vec<usize>> {
    let cols = target + 1;
    // best[i][s]: best alpha using items[..i] with total size s
    let mut best: Vec<Option<i64>> = vec![None; (items.len() + 1) * cols];
    best[0] = Some(0);
    for (i, &(size, alpha)) in items.iter().enumerate() {
        assert!(size >= 1, "component sizes are positive");
        for s in 0..cols {
            let skip = best[i * cols + s];
            let take = if s >= size { best[i * cols + s - size].map(|a| a + alpha) } else { None };
            best[(i + 1) * cols + s] = match (skip, take) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            };
        }
    }
    best[items.len() * cols + target]?;
    let mut picked = Vec::new();
    let mut s = target;
    for i in (0..items.len()).rev() {
        let here = best[(i + 1) * cols + s];
        if best[i * cols + s] != here {
            picked.push(i);
            s -= items[i].0;
        }
    }
    picked.reverse();
    Some(picked)
}
