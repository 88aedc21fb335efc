use crate::error::{check_k, SolveError};
use crate::exec::{map_fold, Exec};
use crate::graph::{Graph, VertexSet};
use crate::problem::{Goal, Method, ProblemSpec, Solution};

use super::decomposition::Violation;
use super::nice::{NiceDecomposition, NiceKind};

/// Table sizes touched by one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub nodes: usize,
    /// Largest table, in rows (`2^|bag|`).
    pub max_rows: usize,
    /// Sum of `2^|bag| × (k+1)` over all nodes.
    pub total_entries: usize,
}

/// One node's table: `entries[config * (k+1) + count]` is the best value of
/// a partial solution on `G_i` that agrees with `config` on the bag and uses
/// `count` vertices below it, `None` when infeasible. `choice` records the
/// forget bit or the left join split for witness recovery.
struct Table {
    entries: Vec<Option<i64>>,
    choice: Vec<u32>,
}

struct Ctx<'a> {
    g: &'a Graph,
    nice: &'a NiceDecomposition,
    w1: i64,
    w2: i64,
    goal: Goal,
    cols: usize,
}

fn prefer(goal: Goal, a: i64, b: i64) -> bool {
    match goal {
        Goal::Min => a < b,
        Goal::Max => a > b,
    }
}

/// Bit `p` removed from `config`.
fn drop_bit(config: usize, p: usize) -> usize {
    (config & ((1 << p) - 1)) | ((config >> (p + 1)) << p)
}

/// `bit` inserted into `config` at position `p`.
fn insert_bit(config: usize, p: usize, bit: usize) -> usize {
    (config & ((1 << p) - 1)) | (bit << p) | ((config >> p) << (p + 1))
}

impl Ctx<'_> {
    /// Adjacency of each bag position as a mask over bag positions.
    fn bag_masks(&self, bag: &[usize]) -> Vec<usize> {
        bag.iter()
            .map(|&u| bag.iter().enumerate().filter(|&(_, &w)| self.g.has_edge(u, w)).fold(0, |m, (j, _)| m | 1 << j))
            .collect()
    }

    fn compute(&self, idx: usize, tables: &[Option<Table>]) -> Table {
        let node = &self.nice.nodes()[idx];
        let rows = 1usize << node.bag.len();
        let cols = self.cols;
        let mut entries = vec![None; rows * cols];
        let mut choice = vec![0u32; rows * cols];
        let child = |j: usize| tables[node.children[j]].as_ref().expect("children computed first");
        match node.kind {
            NiceKind::Leaf => {
                for config in 0..rows {
                    entries[config * cols] = Some(0);
                }
            }
            NiceKind::Introduce(v) => {
                let below = child(0);
                let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
                let near = self.bag_masks(&node.bag)[p];
                for config in 0..rows {
                    let taken = (config & near).count_ones() as i64;
                    let rest = (!config & near).count_ones() as i64;
                    let delta = if config >> p & 1 == 1 { self.w1 * taken + self.w2 * rest } else { self.w2 * taken };
                    let from = drop_bit(config, p);
                    for count in 0..cols {
                        entries[config * cols + count] = below.entries[from * cols + count].map(|x| x + delta);
                    }
                }
            }
            NiceKind::Forget(v) => {
                let below = child(0);
                let child_bag = &self.nice.nodes()[node.children[0]].bag;
                let p = child_bag.binary_search(&v).expect("forgotten vertex in child bag");
                for config in 0..rows {
                    let out = insert_bit(config, p, 0);
                    let inn = insert_bit(config, p, 1);
                    for count in 0..cols {
                        let skip = below.entries[out * cols + count];
                        let take = if count > 0 { below.entries[inn * cols + count - 1] } else { None };
                        let slot = config * cols + count;
                        (entries[slot], choice[slot]) = match (skip, take) {
                            (Some(a), Some(b)) if prefer(self.goal, b, a) => (Some(b), 1),
                            (Some(a), _) => (Some(a), 0),
                            (None, Some(b)) => (Some(b), 1),
                            (None, None) => (None, 0),
                        };
                    }
                }
            }
            NiceKind::Join => {
                let (left, right) = (child(0), child(1));
                let masks = self.bag_masks(&node.bag);
                for config in 0..rows {
                    let (mut inner2, mut cross) = (0i64, 0i64);
                    for (j, &m) in masks.iter().enumerate() {
                        if config >> j & 1 == 1 {
                            inner2 += (config & m).count_ones() as i64;
                            cross += (!config & m).count_ones() as i64;
                        }
                    }
                    // bag edges are counted by both children
                    let shared = self.w1 * inner2 / 2 + self.w2 * cross;
                    for count in 0..cols {
                        let mut best: Option<(i64, u32)> = None;
                        for split in 0..=count {
                            let l = left.entries[config * cols + split];
                            let r = right.entries[config * cols + count - split];
                            if let (Some(l), Some(r)) = (l, r) {
                                let total = l + r - shared;
                                if best.is_none_or(|(b, _)| prefer(self.goal, total, b)) {
                                    best = Some((total, split as u32));
                                }
                            }
                        }
                        if let Some((value, split)) = best {
                            entries[config * cols + count] = Some(value);
                            choice[config * cols + count] = split;
                        }
                    }
                }
            }
        }
        Table { entries, choice }
    }
}

/// Exact optimum of any local problem by bottom-up dynamic programming over
/// `nice`, which must be a decomposition of `g`. Sibling subtrees are filled
/// concurrently when `exec` is parallel.
pub fn solve_tw(
    spec: &ProblemSpec,
    g: &Graph,
    nice: &NiceDecomposition,
    k: usize,
    exec: &Exec,
) -> Result<(Solution, DpStats), SolveError> {
    check_k(k, g.n())?;
    nice.check_structure().map_err(|why| SolveError::InvalidDecomposition(Violation::NotATree(why)))?;
    nice.to_tree_decomposition().validate(g).map_err(SolveError::InvalidDecomposition)?;
    let Some(root) = nice.root() else {
        // only the empty graph has an empty valid decomposition
        return Ok((Solution::evaluate(spec, g, VertexSet::new(g.n()), Method::TreeDecomposition), DpStats::default()));
    };

    let ctx = Ctx { g, nice, w1: spec.weight_inner(), w2: spec.weight_cut(), goal: spec.goal(), cols: k + 1 };
    let nodes = nice.nodes();
    let mut height = vec![0usize; nodes.len()];
    for (i, node) in nodes.iter().enumerate() {
        height[i] = node.children.iter().map(|&c| height[c] + 1).max().unwrap_or(0);
    }
    let levels = height.iter().copied().max().unwrap_or(0) + 1;
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); levels];
    for (i, &h) in height.iter().enumerate() {
        by_level[h].push(i);
    }

    let mut tables: Vec<Option<Table>> = (0..nodes.len()).map(|_| None).collect();
    exec.install(|| {
        for level in &by_level {
            let done = map_fold(
                exec.is_parallel(),
                level,
                |&i| (i, ctx.compute(i, &tables)),
                Vec::with_capacity(level.len()),
                |mut acc, item| {
                    acc.push(item);
                    acc
                },
            );
            for (i, table) in done {
                tables[i] = Some(table);
            }
        }
    });

    let stats = DpStats {
        nodes: nodes.len(),
        max_rows: nodes.iter().map(|n| 1usize << n.bag.len()).max().unwrap_or(0),
        total_entries: nodes.iter().map(|n| (1usize << n.bag.len()) * ctx.cols).sum(),
    };

    let table = |i: usize| tables[i].as_ref().expect("all tables filled");
    if table(root).entries[k].is_none() {
        return Err(SolveError::KTooLarge { k, n: g.n() });
    }

    // walk back down the recorded choices
    let mut chosen = VertexSet::new(g.n());
    let mut stack = vec![(root, 0usize, k)];
    while let Some((i, config, count)) = stack.pop() {
        let node = &nodes[i];
        let slot = config * ctx.cols + count;
        match node.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
                stack.push((node.children[0], drop_bit(config, p), count));
            }
            NiceKind::Forget(v) => {
                let bit = table(i).choice[slot] as usize;
                let child_bag = &nodes[node.children[0]].bag;
                let p = child_bag.binary_search(&v).expect("forgotten vertex in child bag");
                if bit == 1 {
                    chosen.insert(v);
                }
                stack.push((node.children[0], insert_bit(config, p, bit), count - bit));
            }
            NiceKind::Join => {
                let split = table(i).choice[slot] as usize;
                stack.push((node.children[0], config, split));
                stack.push((node.children[1], config, count - split));
            }
        }
    }

    let solution = Solution::evaluate(spec, g, chosen, Method::TreeDecomposition);
    debug_assert_eq!(Some(solution.value.0), table(root).entries[k]);
    Ok((solution, stats))
}
