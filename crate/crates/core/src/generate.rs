//! Random instance families for tests and benchmarks. Every generator is a
//! pure function of its arguments and the RNG state.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generators emit simple graphs")
}

/// `G(n, prob)` visited in random pair order, skipping edges that would push
/// an endpoint past `max_degree`.
pub fn erdos_renyi_capped<R: Rng>(n: usize, prob: f64, max_degree: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut degree = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < max_degree && degree[v] < max_degree && rng.gen_bool(prob) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Uniform random recursive tree: vertex `i` attaches to a random earlier one.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    build(n, &edges)
}

/// A clique on `0..clique` plus an independent set whose members each link to
/// clique vertices with probability `prob`.
pub fn split_graph<R: Rng>(clique: usize, independent: usize, prob: f64, rng: &mut R) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..clique).flat_map(|u| (u + 1..clique).map(move |v| (u, v))).collect();
    for i in clique..clique + independent {
        for c in 0..clique {
            if rng.gen_bool(prob) {
                edges.push((c, i));
            }
        }
    }
    build(clique + independent, &edges)
}

/// Sparse random graph patched until every degree is at least `r`.
///
/// # Panics
/// If `n ≤ r`.
#[allow(clippy::needless_range_loop)]
pub fn min_degree_graph<R: Rng>(n: usize, r: usize, prob: f64, rng: &mut R) -> Graph {
    assert!(n > r, "need more than {r} vertices for minimum degree {r}");
    let base = erdos_renyi_capped(n, prob, n, rng);
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for &(u, v) in base.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    for v in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&u| u != v && !adj[v][u]).collect();
        others.shuffle(rng);
        let have = n - 1 - others.len();
        for u in others.into_iter().take(r.saturating_sub(have)) {
            adj[v][u] = true;
            adj[u][v] = true;
        }
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]).collect();
    build(n, &edges)
}

/// Random partial `width`-tree: grow a `width`-tree by attaching each new
/// vertex to a random existing `width`-clique, keeping each edge with
/// probability `keep`. Treewidth is at most `width`.
pub fn partial_ktree<R: Rng>(n: usize, width: usize, keep: f64, rng: &mut R) -> Graph {
    let w = width.min(n.saturating_sub(1));
    let mut edges: Vec<(usize, usize)> = (0..=w).flat_map(|u| (u + 1..=w).map(move |v| (u, v))).collect();
    let mut cliques: Vec<Vec<usize>> = if n > w { vec![(0..=w).collect()] } else { Vec::new() };
    for v in w + 1..n {
        let host = cliques[rng.gen_range(0..cliques.len())].clone();
        let drop = rng.gen_range(0..host.len());
        let base: Vec<usize> = host.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &u)| u).collect();
        for &u in &base {
            edges.push((u, v));
        }
        let mut clique = base;
        clique.push(v);
        cliques.push(clique);
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    build(n, &kept)
}
