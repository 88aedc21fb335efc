//! Greediness-for-parameterization branching.
//!
//! [`alg1`] handles degrading objectives: it picks the vertex whose
//! contribution is best when added to the partial solution `T` and branches
//! on its closed neighborhood, giving a tree of depth `k` and arity `Δ+1`.
//!
//! [`alg2`] handles arbitrary objectives: at every node it finds, for each
//! size `i`, the connected set `S_i` of `G[V∖T]` that makes `T ∪ S_i` best,
//! and branches on the members of those sets.

use std::cmp::Ordering;

use crate::error::{check_k, SolveError};
use crate::exec::{map_fold, Exec};
use crate::graph::{ConnectedSets, Graph, VertexSet};
use crate::problem::{pick_best, Method, ProblemSpec, Solution, Value};

/// Fan out sibling branches to the pool only this close to the root.
const PARALLEL_DEPTH: usize = 2;

/// Size of the explored branching tree.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchStats {
    pub nodes_visited: u64,
    pub max_depth: usize,
    pub leaves: u64,
}

impl BranchStats {
    fn node(depth: usize) -> Self {
        BranchStats { nodes_visited: 1, max_depth: depth, leaves: 0 }
    }

    fn absorb(&mut self, child: BranchStats) {
        self.nodes_visited += child.nodes_visited;
        self.leaves += child.leaves;
        self.max_depth = self.max_depth.max(child.max_depth);
    }
}

/// `Σ_{d=0..=depth} arity^d`, saturating.
pub fn tree_size_bound(arity: u64, depth: usize) -> u64 {
    let mut total: u64 = 0;
    let mut level: u64 = 1;
    for _ in 0..=depth {
        total = total.saturating_add(level);
        level = level.saturating_mul(arity);
    }
    total
}

type Outcome = (Option<Solution>, BranchStats);

fn merge(goal: crate::problem::Goal, mut acc: Outcome, child: Outcome) -> Outcome {
    acc.1.absorb(child.1);
    (pick_best(goal, acc.0, child.0), acc.1)
}

/// How ALG1 ranks candidate pivots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alg1Pivot {
    /// Marginal gain `val(T ∪ {v}) − val(T) = α2·d(v) + (α1 − 2α2)·|E(v, T)|`.
    /// Exact on every degrading objective.
    #[default]
    MarginalGain,
    /// The vertex's own share `δ(v, T ∪ {v})`. Ignores the loss it inflicts
    /// on its neighbors already in `T`, so it can miss the optimum.
    Contribution,
}

/// Exact solver for degrading objectives in `O*(Δ^k)`.
pub fn alg1(spec: &ProblemSpec, g: &Graph, k: usize, exec: &Exec) -> Result<(Solution, BranchStats), SolveError> {
    alg1_with(spec, g, k, Alg1Pivot::default(), exec)
}

pub fn alg1_with(
    spec: &ProblemSpec,
    g: &Graph,
    k: usize,
    pivot: Alg1Pivot,
    exec: &Exec,
) -> Result<(Solution, BranchStats), SolveError> {
    if !spec.is_degrading() {
        return Err(SolveError::NotDegrading(spec.to_string()));
    }
    check_k(k, g.n())?;
    let run = Alg1Run { spec, g, pivot, parallel: exec.is_parallel() };
    let (best, stats) = exec.install(|| run.node(&VertexSet::new(g.n()), k));
    Ok((best.expect("a degrading branch always reaches a leaf"), stats))
}

/// The greedy pivot: the vertex outside `taken` with the best score under
/// `rule`, smallest id among ties.
pub fn greedy_pivot(spec: &ProblemSpec, g: &Graph, taken: &VertexSet, rule: Alg1Pivot) -> Option<usize> {
    let goal = spec.goal();
    let (w1, w2) = (spec.weight_inner(), spec.weight_cut());
    let mut best: Option<(usize, Value)> = None;
    for v in (0..g.n()).filter(|&v| !taken.contains(v)) {
        let inside = g.degree_into(v, taken);
        let score = match rule {
            Alg1Pivot::MarginalGain => Value(w2 * g.degree(v) as i64 + (w1 - 2 * w2) * inside as i64),
            Alg1Pivot::Contribution => spec.contribution_of_counts(inside, g.degree(v) - inside),
        };
        if best.is_none_or(|(_, b)| goal.better(score, b)) {
            best = Some((v, score));
        }
    }
    best.map(|(v, _)| v)
}

struct Alg1Run<'a> {
    spec: &'a ProblemSpec,
    g: &'a Graph,
    pivot: Alg1Pivot,
    parallel: bool,
}

impl Alg1Run<'_> {
    fn node(&self, taken: &VertexSet, remaining: usize) -> Outcome {
        let (spec, g) = (self.spec, self.g);
        let depth = taken.len();
        let mut stats = BranchStats::node(depth);
        if remaining == 0 {
            stats.leaves = 1;
            return (Some(Solution::evaluate(spec, g, taken.clone(), Method::Alg1)), stats);
        }
        if g.n() - taken.len() < remaining {
            return (None, stats);
        }
        let pivot = greedy_pivot(spec, g, taken, self.pivot).expect("room for another vertex");
        let children: Vec<usize> = std::iter::once(pivot)
            .chain(g.neighbors(pivot).iter().copied())
            .filter(|&w| !taken.contains(w))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let fan_out = self.parallel && depth < PARALLEL_DEPTH;
        map_fold(
            fan_out,
            &children,
            |&w| self.node(&taken.with(w), remaining - 1),
            (None, stats),
            |acc, child| merge(spec.goal(), acc, child),
        )
    }
}

/// What ALG2 branches on once the greedy sets `S_1..S_r` are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alg2Branching {
    /// The members of the sets themselves. Arity at most `r(r+1)/2`.
    #[default]
    Members,
    /// The closed neighborhoods `N[S_i] ∖ T` of the sets.
    ClosedNeighborhood,
}

/// Branches on members of the greedy connected sets. Exact on objectives
/// that are not degrading; on degrading ones an optimum can hide next to
/// the sets, which [`Alg2Branching::ClosedNeighborhood`] covers.
pub fn alg2(spec: &ProblemSpec, g: &Graph, k: usize, exec: &Exec) -> Result<(Solution, BranchStats), SolveError> {
    alg2_with(spec, g, k, Alg2Branching::Members, exec)
}

pub fn alg2_with(
    spec: &ProblemSpec,
    g: &Graph,
    k: usize,
    branching: Alg2Branching,
    exec: &Exec,
) -> Result<(Solution, BranchStats), SolveError> {
    check_k(k, g.n())?;
    let (best, stats) = alg2_restricted(spec, g, k, &VertexSet::full(g.n()), branching, exec)?;
    Ok((best.expect("k <= n always admits a leaf"), stats))
}

/// ALG2 where only `eligible` vertices may enter the solution; candidate
/// connectivity is measured in `G[eligible ∖ T]` while values use all of `G`.
/// Returns no solution when fewer than `k` vertices are eligible.
pub(crate) fn alg2_restricted(
    spec: &ProblemSpec,
    g: &Graph,
    k: usize,
    eligible: &VertexSet,
    branching: Alg2Branching,
    exec: &Exec,
) -> Result<Outcome, SolveError> {
    check_k(k, g.n())?;
    let ctx = Alg2Ctx { spec, g, eligible, branching };
    Ok(exec.install(|| ctx.node(&VertexSet::new(g.n()), k, exec.is_parallel())))
}

struct Alg2Ctx<'a> {
    spec: &'a ProblemSpec,
    g: &'a Graph,
    eligible: &'a VertexSet,
    branching: Alg2Branching,
}

impl Alg2Ctx<'_> {
    fn node(&self, taken: &VertexSet, remaining: usize, parallel: bool) -> Outcome {
        let depth = taken.len();
        let mut stats = BranchStats::node(depth);
        if remaining == 0 {
            stats.leaves = 1;
            return (Some(Solution::evaluate(self.spec, self.g, taken.clone(), Method::Alg2)), stats);
        }
        let mut free = self.eligible.clone();
        free.difference_with(taken);
        if free.len() < remaining {
            return (None, stats);
        }
        let sets = best_extensions_within(self.spec, self.g, taken, &free, remaining);
        let mut branch_on = VertexSet::new(self.g.n());
        for (_, s) in sets.iter().flatten() {
            match self.branching {
                Alg2Branching::Members => branch_on.union_with(s),
                Alg2Branching::ClosedNeighborhood => {
                    for v in s.iter() {
                        branch_on.union_with(&self.g.neighborhood(v, true));
                    }
                }
            }
        }
        branch_on.difference_with(taken);
        let children: Vec<usize> = branch_on.iter().filter(|&v| self.eligible.contains(v)).collect();
        let fan_out = parallel && depth < PARALLEL_DEPTH;
        map_fold(
            fan_out,
            &children,
            |&v| self.node(&taken.with(v), remaining - 1, parallel),
            (None, stats),
            |acc, child| merge(self.spec.goal(), acc, child),
        )
    }
}

/// For each `i` in `1..=max_size`, the connected set `S` of `G[free]` with
/// `|S| = i` optimizing `val(taken ∪ S)`, ties to the lexicographically
/// smallest `S`; `None` where no connected set of that size exists.
fn best_extensions_within(
    spec: &ProblemSpec,
    g: &Graph,
    taken: &VertexSet,
    free: &VertexSet,
    max_size: usize,
) -> Vec<Option<(Value, VertexSet)>> {
    let goal = spec.goal();
    let mut best: Vec<Option<(Value, VertexSet)>> = vec![None; max_size];
    for root in free.iter() {
        let sets = ConnectedSets::new(g, Some(free), root, max_size).expect("root and size validated");
        for s in sets {
            let mut union = taken.clone();
            union.union_with(&s);
            let value = spec.value(g, &union);
            let slot = &mut best[s.len() - 1];
            let replace = match slot {
                None => true,
                Some((v, cur)) => goal.better(value, *v) || (value == *v && s.cmp_lex(cur) == Ordering::Less),
            };
            if replace {
                *slot = Some((value, s));
            }
        }
    }
    best
}

/// `S ⊆ V∖T`, `|S| = size`, `S` connected in `G[V∖T]`, optimizing
/// `val(T ∪ S)` with lexicographic tie-break.
pub fn best_connected_extension(spec: &ProblemSpec, g: &Graph, taken: &VertexSet, size: usize) -> Option<VertexSet> {
    if size == 0 || size > g.n() - taken.len() {
        return None;
    }
    let free = taken.complement();
    best_extensions_within(spec, g, taken, &free, size).pop().flatten().map(|(_, s)| s)
}
