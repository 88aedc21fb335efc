use std::fmt;

use crate::graph::{Graph, ParseError};

/// The first broken decomposition property found by
/// [`TreeDecomposition::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The node graph is not a tree.
    NotATree(String),
    /// A bag names a vertex outside the graph.
    VertexOutOfRange { node: usize, vertex: usize },
    /// (i): a vertex appears in no bag.
    UncoveredVertex(usize),
    /// (ii): the endpoints of an edge never share a bag.
    UncoveredEdge(usize, usize),
    /// (iii): the nodes holding a vertex do not form a subtree.
    DisconnectedVertex(usize),
}

impl Violation {
    /// `"(i)"`, `"(ii)"` or `"(iii)"` for the three decomposition conditions.
    pub fn condition(&self) -> Option<&'static str> {
        match self {
            Violation::UncoveredVertex(_) => Some("(i)"),
            Violation::UncoveredEdge(..) => Some("(ii)"),
            Violation::DisconnectedVertex(_) => Some("(iii)"),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree(why) => write!(f, "decomposition tree is not a tree: {why}"),
            Violation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag of node {node} holds vertex {vertex}, which is not in the graph")
            }
            Violation::UncoveredVertex(v) => write!(f, "condition (i): vertex {v} is in no bag"),
            Violation::UncoveredEdge(u, v) => write!(f, "condition (ii): edge ({u}, {v}) is in no bag"),
            Violation::DisconnectedVertex(v) => {
                write!(f, "condition (iii): bags holding vertex {v} do not form a subtree")
            }
        }
    }
}

/// Bags indexed by node, plus the tree over nodes. Node ids are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; nothing else is checked here.
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub(crate) fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks that the node graph is a tree and that every vertex occupies a
    /// subtree. Needs no graph.
    pub fn validate_structure(&self) -> Result<(), Violation> {
        let nodes = self.bags.len();
        for &(a, b) in &self.tree_edges {
            if a >= nodes || b >= nodes {
                return Err(Violation::NotATree(format!("edge ({a}, {b}) names a missing node")));
            }
            if a == b {
                return Err(Violation::NotATree(format!("self-loop on node {a}")));
            }
        }
        if nodes > 0 && self.tree_edges.len() != nodes - 1 {
            return Err(Violation::NotATree(format!("{} edges for {nodes} nodes", self.tree_edges.len())));
        }
        if nodes == 0 && !self.tree_edges.is_empty() {
            return Err(Violation::NotATree("edges without nodes".into()));
        }
        if nodes > 0 {
            let adj = self.tree_adjacency();
            let mut seen = vec![false; nodes];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if let Some(lost) = seen.iter().position(|&s| !s) {
                return Err(Violation::NotATree(format!("node {lost} is unreachable")));
            }
        }
        // a sub-forest of a tree is connected iff it has one edge fewer than nodes
        let universe = self.bags.iter().flatten().copied().max().map_or(0, |v| v + 1);
        let mut holders = vec![0usize; universe];
        let mut links = vec![0usize; universe];
        for bag in &self.bags {
            for &v in bag {
                holders[v] += 1;
            }
        }
        for &(a, b) in &self.tree_edges {
            for &v in &self.bags[a] {
                if self.bags[b].binary_search(&v).is_ok() {
                    links[v] += 1;
                }
            }
        }
        for v in 0..universe {
            if holders[v] > 0 && links[v] + 1 != holders[v] {
                return Err(Violation::DisconnectedVertex(v));
            }
        }
        Ok(())
    }

    /// Checks the tree shape and conditions (i), (ii), (iii) against `g`,
    /// reporting the first failure.
    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        let n = g.n();
        let mut covered = vec![false; n];
        for (node, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Violation::VertexOutOfRange { node, vertex: v });
                }
                covered[v] = true;
            }
        }
        match self.validate_structure() {
            Err(e @ Violation::NotATree(_)) => return Err(e),
            Err(e) => {
                self.check_cover(g, &covered)?;
                return Err(e);
            }
            Ok(()) => {}
        }
        self.check_cover(g, &covered)
    }

    fn check_cover(&self, g: &Graph, covered: &[bool]) -> Result<(), Violation> {
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Violation::UncoveredVertex(v));
        }
        for &(u, v) in g.edges() {
            let together = self.bags.iter().any(|bag| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok());
            if !together {
                return Err(Violation::UncoveredEdge(u, v));
            }
        }
        Ok(())
    }

    /// PACE `.td` text: `s td <nodes> <width+1> <n>`, 1-based `b` lines and
    /// tree edges, 0-based vertex ids.
    pub fn to_pace_string(&self, n: usize) -> String {
        let mut out = format!("s td {} {} {}\n", self.bags.len(), self.width() + 1, n);
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for v in bag {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        for &(a, b) in &self.tree_edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }
}

/// Parses the PACE-style `.td` format written by
/// [`TreeDecomposition::to_pace_string`].
pub fn parse_decomposition(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = l.split_whitespace().collect();
        let num = |tok: &str| -> Result<usize, ParseError> {
            tok.parse().map_err(|_| ParseError::new(line, format!("malformed integer `{tok}`")))
        };
        match parts[0] {
            "s" => {
                if parts.len() != 5 || parts[1] != "td" {
                    return Err(ParseError::new(line, "expected `s td <nodes> <width+1> <n>`"));
                }
                if header.is_some() {
                    return Err(ParseError::new(line, "second solution line"));
                }
                let nodes = num(parts[2])?;
                let max_bag = num(parts[3])?;
                num(parts[4])?;
                bags = vec![None; nodes];
                header = Some((nodes, max_bag));
            }
            "b" => {
                if header.is_none() {
                    return Err(ParseError::new(line, "bag before `s td` line"));
                }
                let id = num(parts.get(1).ok_or_else(|| ParseError::new(line, "missing bag id"))?)?;
                if id == 0 || id > bags.len() {
                    return Err(ParseError::new(line, format!("bag id {id} outside 1..={}", bags.len())));
                }
                if bags[id - 1].is_some() {
                    return Err(ParseError::new(line, format!("bag {id} given twice")));
                }
                bags[id - 1] = Some(parts[2..].iter().map(|t| num(t)).collect::<Result<_, _>>()?);
            }
            _ => {
                if header.is_none() {
                    return Err(ParseError::new(line, "tree edge before `s td` line"));
                }
                if parts.len() != 2 {
                    return Err(ParseError::new(line, "expected a tree edge `<node> <node>`"));
                }
                let (a, b) = (num(parts[0])?, num(parts[1])?);
                if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                    return Err(ParseError::new(line, "tree edge names a missing node"));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, max_bag) = header.ok_or_else(|| ParseError::new(1, "missing `s td` line"))?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| ParseError::new(1, format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    let td = TreeDecomposition::new(bags, edges);
    let largest = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(ParseError::new(1, format!("header declares bag size {max_bag}, largest bag has {largest}")));
    }
    Ok(td)
}
