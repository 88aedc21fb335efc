//! Simple undirected graphs with dense vertex ids, plus the edge-counting
//! primitives every objective evaluation reduces to.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use thiserror::Error;

/// A subset of `0..n` with a cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
    len: usize,
}

impl VertexSet {
    /// Empty set over the universe `0..n`.
    pub fn new(n: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(n), len: 0 }
    }

    /// The whole universe `0..n`.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits, len: n }
    }

    pub fn from_slice(n: usize, vertices: &[usize]) -> Self {
        let mut set = VertexSet::new(n);
        for &v in vertices {
            set.insert(v);
        }
        set
    }

    /// Size of the universe the set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    /// Returns true if `v` was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.bits.len(), "vertex {v} outside universe 0..{}", self.bits.len());
        let fresh = !self.bits.put(v);
        if fresh {
            self.len += 1;
        }
        fresh
    }

    /// Returns true if `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if self.contains(v) {
            self.bits.set(v, false);
            self.len -= 1;
            true
        } else {
            false
        }
    }

    /// Copy of `self` with `v` added.
    pub fn with(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        let len = bits.len() - self.len;
        VertexSet { bits, len }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
        self.len = self.bits.count_ones(..);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
        self.len = self.bits.count_ones(..);
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Lexicographic order on the sorted member lists.
    pub fn cmp_lex(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("root {root} outside 0..{n}")]
    RootOutOfRange { root: usize, n: usize },
    #[error("max_size must be at least 1")]
    ZeroMaxSize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and ids `>= n`.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![VertexSet::new(n); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !rows[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            rows[v].insert(u);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        let adjacency = rows.iter().map(VertexSet::to_vec).collect();
        Ok(Graph { adjacency, rows, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, each edge once as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted open neighborhood.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Open neighborhood as a bitset row.
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `N(v)`, or `N[v]` when `closed`.
    pub fn neighborhood(&self, v: usize, closed: bool) -> VertexSet {
        let mut set = self.rows[v].clone();
        if closed {
            set.insert(v);
        }
        set
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_count(set)
    }

    /// `|E(S)|`: edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        self.check_universe(set);
        set.iter().map(|v| self.degree_into(v, set)).sum::<usize>() / 2
    }

    /// `|E(S, V \ S)|`: edges with exactly one endpoint in `set`.
    pub fn edges_crossing(&self, set: &VertexSet) -> usize {
        self.check_universe(set);
        set.iter().map(|v| self.degree(v) - self.degree_into(v, set)).sum()
    }

    /// `|E(A, B)|` for disjoint `a` and `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        self.check_universe(a);
        self.check_universe(b);
        a.iter().map(|v| self.degree_into(v, b)).sum()
    }

    fn check_universe(&self, set: &VertexSet) {
        assert_eq!(
            set.universe(),
            self.n(),
            "vertex set over 0..{} used with a graph on {} vertices",
            set.universe(),
            self.n()
        );
    }

    /// Connected components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n()))
    }

    /// Components of `G[allowed]`, ordered by smallest vertex.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in allowed.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            seen.insert(start);
            stack.push(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in self.neighbors(u) {
                    if allowed.contains(w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether `G[set]` is connected. The empty set counts as disconnected.
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        match set.iter().next() {
            None => false,
            Some(_) => self.components_within(set).len() == 1,
        }
    }

    /// `G[set]` relabelled to `0..|set|`, with the map from new ids to old ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids = set.to_vec();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let sub = Graph::new(old_ids.len(), &edges).expect("induced subgraph of a simple graph");
        (sub, old_ids)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("relabelling must be a permutation")
    }

    /// Edge-list serialization accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Every connected vertex set `S` with `min(S) = root` and `|S| <= max_size`.
    pub fn connected_sets(&self, root: usize, max_size: usize) -> Result<ConnectedSets<'_>, GraphError> {
        ConnectedSets::new(self, None, root, max_size)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges).finish()
    }
}

/// Parses either the plain edge-list format (`n m` header, 0-based `u v`
/// lines, `#` comments) or the DIMACS `p edge` format (1-based `e u v`).
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let first = lines.clone().next();
    match first {
        None => Err(ParseError::new(1, "missing header")),
        Some((_, l)) if l.starts_with('p') || l.starts_with('c') => parse_dimacs(lines),
        Some(_) => {
            let (hline, header) = lines.next().unwrap();
            let (n, m) = parse_pair(hline, header)?;
            let mut edges = Vec::with_capacity(m);
            let mut rows = vec![VertexSet::new(n); n];
            for (line, l) in lines {
                let (u, v) = parse_pair(line, l)?;
                push_edge(&mut rows, &mut edges, line, u, v)?;
            }
            if edges.len() != m {
                return Err(ParseError::new(hline, format!("header declares {m} edges, found {}", edges.len())));
            }
            Ok(Graph::new(n, &edges).expect("edges validated while parsing"))
        }
    }
}

fn parse_dimacs<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut rows: Vec<VertexSet> = Vec::new();
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        match parts.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::new(line, "second problem line"));
                }
                let kind = parts.next();
                if kind != Some("edge") && kind != Some("col") {
                    return Err(ParseError::new(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_usize(line, parts.next())?;
                let m = parse_usize(line, parts.next())?;
                rows = vec![VertexSet::new(n); n];
                header = Some((line, n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(ParseError::new(line, "edge before problem line"));
                }
                let u = parse_usize(line, parts.next())?;
                let v = parse_usize(line, parts.next())?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "DIMACS vertex ids are 1-based"));
                }
                push_edge(&mut rows, &mut edges, line, u - 1, v - 1)?;
            }
            _ => return Err(ParseError::new(line, format!("unrecognised line `{l}`"))),
        }
    }
    let (hline, n, m) = header.ok_or_else(|| ParseError::new(1, "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(ParseError::new(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges).expect("edges validated while parsing"))
}

fn push_edge(
    rows: &mut [VertexSet],
    edges: &mut Vec<(usize, usize)>,
    line: usize,
    u: usize,
    v: usize,
) -> Result<(), ParseError> {
    let n = rows.len();
    if u >= n || v >= n {
        return Err(ParseError::new(line, format!("vertex id out of range 0..{n}")));
    }
    if u == v {
        return Err(ParseError::new(line, format!("self-loop on vertex {u}")));
    }
    if !rows[u].insert(v) {
        return Err(ParseError::new(line, format!("duplicate edge ({u}, {v})")));
    }
    rows[v].insert(u);
    edges.push((u, v));
    Ok(())
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), ParseError> {
    let mut parts = l.split_whitespace();
    let a = parse_usize(line, parts.next())?;
    let b = parse_usize(line, parts.next())?;
    if parts.next().is_some() {
        return Err(ParseError::new(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

fn parse_usize(line: usize, tok: Option<&str>) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, "missing integer"))?;
    tok.parse().map_err(|_| ParseError::new(line, format!("malformed integer `{tok}`")))
}

struct Frame {
    members: VertexSet,
    excluded: VertexSet,
    processed: VertexSet,
}

/// Streaming enumeration of connected vertex sets through a fixed root.
///
/// Repeatedly takes the smallest unprocessed member and decides once which
/// of its still-undecided neighbors join the set. Only vertices greater than
/// the root are eligible, so every set comes out of exactly one root: its
/// minimum.
pub struct ConnectedSets<'g> {
    graph: &'g Graph,
    allowed: Option<&'g VertexSet>,
    root: usize,
    max_size: usize,
    stack: Vec<Frame>,
}

impl<'g> ConnectedSets<'g> {
    /// Enumeration inside `G[allowed]` when `allowed` is given.
    pub fn new(
        graph: &'g Graph,
        allowed: Option<&'g VertexSet>,
        root: usize,
        max_size: usize,
    ) -> Result<Self, GraphError> {
        let n = graph.n();
        if root >= n {
            return Err(GraphError::RootOutOfRange { root, n });
        }
        if max_size == 0 {
            return Err(GraphError::ZeroMaxSize);
        }
        let mut stack = Vec::new();
        if allowed.is_none_or(|a| a.contains(root)) {
            stack.push(Frame {
                members: VertexSet::from_slice(n, &[root]),
                excluded: VertexSet::new(n),
                processed: VertexSet::new(n),
            });
        }
        Ok(ConnectedSets { graph, allowed, root, max_size, stack })
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(frame) = self.stack.pop() {
            let pivot = frame.members.iter().find(|&u| !frame.processed.contains(u));
            let Some(pivot) = pivot else {
                return Some(frame.members);
            };
            let room = self.max_size - frame.members.len();
            let candidates: Vec<usize> = self
                .graph
                .neighbors(pivot)
                .iter()
                .copied()
                .filter(|&w| {
                    w > self.root
                        && !frame.members.contains(w)
                        && !frame.excluded.contains(w)
                        && self.allowed.is_none_or(|a| a.contains(w))
                })
                .collect();
            let mut children = Vec::new();
            for size in 0..=room.min(candidates.len()) {
                for chosen in candidates.iter().copied().combinations(size) {
                    let mut child = Frame {
                        members: frame.members.clone(),
                        excluded: frame.excluded.clone(),
                        processed: frame.processed.with(pivot),
                    };
                    for &w in &candidates {
                        if chosen.contains(&w) {
                            child.members.insert(w);
                        } else {
                            child.excluded.insert(w);
                        }
                    }
                    children.push(child);
                }
            }
            // reversed so the smallest extensions are explored first
            self.stack.extend(children.into_iter().rev());
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, vs)
    }

    #[test]
    fn parses_path_and_triangle() {
        let p = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!((p.n(), p.m()), (3, 2));
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
        let t = parse_graph("# triangle\n3 3\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!(t.m(), 3);
        assert!(t.has_edge(2, 0));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_graph("2 1\n0 0").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
        let e = parse_graph("3 2\n0 1\n1 0").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));
        let e = parse_graph("3 1\n0 3").unwrap_err();
        assert!(e.message.contains("out of range"));
        let e = parse_graph("3 1\n0 x").unwrap_err();
        assert!(e.message.contains("malformed"));
        let e = parse_graph("3 2\n0 1").unwrap_err();
        assert!(e.message.contains("declares 2"));
    }

    #[test]
    fn parses_dimacs() {
        let g = parse_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(parse_graph("p edge 2 1\ne 0 1").is_err());
    }

    #[test]
    fn edge_counts_on_k3_and_star() {
        let g = k3();
        assert_eq!(g.edges_within(&set(3, &[0, 1])), 1);
        assert_eq!(g.edges_within(&set(3, &[0, 1, 2])), 3);
        assert_eq!(g.edges_within(&set(3, &[])), 0);
        assert_eq!(g.edges_crossing(&set(3, &[0, 1])), 2);
        assert_eq!(g.edges_crossing(&set(3, &[])), 0);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.edges_crossing(&set(4, &[0])), 3);
    }

    #[test]
    #[should_panic]
    fn foreign_set_is_a_contract_violation() {
        k3().edges_within(&set(5, &[4]));
    }

    #[test]
    fn enumerates_connected_sets() {
        let sets: Vec<_> = k3().connected_sets(0, 2).unwrap().map(|s| s.to_vec()).collect();
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sorted, vec![vec![0], vec![0, 1], vec![0, 2]]);

        let path = parse_graph("3 2\n0 1\n1 2").unwrap();
        let mut sets: Vec<_> = path.connected_sets(0, 3).unwrap().map(|s| s.to_vec()).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);

        let lonely = Graph::empty(3);
        let sets: Vec<_> = lonely.connected_sets(1, 3).unwrap().collect();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].to_vec(), vec![1]);
    }

    #[test]
    fn enumeration_rejects_bad_arguments() {
        assert_eq!(k3().connected_sets(0, 0).err(), Some(GraphError::ZeroMaxSize));
        assert!(matches!(k3().connected_sets(3, 1), Err(GraphError::RootOutOfRange { .. })));
    }

    #[test]
    fn components_and_induced_subgraph() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let comps: Vec<_> = g.connected_components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        let (sub, ids) = g.induced_subgraph(&set(6, &[1, 2, 4]));
        assert_eq!(ids, vec![1, 2, 4]);
        assert_eq!(sub.edges(), &[(0, 1)]);
        assert_eq!((g.max_degree(), g.min_degree()), (2, 0));
        assert_eq!(g.neighborhood(1, true).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new(5);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(1);
        assert_eq!(s.len(), 2);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert!(s.remove(3));
        assert_eq!(s.to_vec(), vec![1]);
        assert_eq!(set(5, &[0, 4]).cmp_lex(&set(5, &[1])), Ordering::Less);
        assert_eq!(set(5, &[1, 2]).cmp_lex(&set(5, &[1])), Ordering::Greater);
    }
}
