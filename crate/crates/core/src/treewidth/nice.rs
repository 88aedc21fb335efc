use std::collections::VecDeque;

use crate::graph::Graph;

use super::decomposition::{TreeDecomposition, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted decomposition made only of leaf, introduce, forget and join
/// nodes. Nodes are stored children-first, so increasing index order is a
/// valid bottom-up schedule, and the root bag is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceDecomposition {
    nodes: Vec<NiceNode>,
    root: Option<usize>,
}

impl NiceDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    /// `None` only for a decomposition with no vertices at all.
    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// The same bags viewed as a plain tree decomposition.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self.nodes.iter().enumerate().flat_map(|(i, n)| n.children.iter().map(move |&c| (i, c))).collect();
        TreeDecomposition::new(bags, edges)
    }

    /// Checks the node-type contracts; returns a description of the first
    /// offending node.
    pub fn check_structure(&self) -> Result<(), String> {
        for (i, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= i) {
                return Err(format!("node {i} has a child stored after it"));
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            match node.kind {
                NiceKind::Leaf => {
                    if !node.children.is_empty() || node.bag.len() != 1 {
                        return Err(format!("leaf {i} must be childless with a singleton bag"));
                    }
                }
                NiceKind::Introduce(v) | NiceKind::Forget(v) => {
                    if node.children.len() != 1 {
                        return Err(format!("node {i} must have exactly one child"));
                    }
                    let (big, small) = match node.kind {
                        NiceKind::Introduce(_) => (&node.bag, child_bag(0)),
                        _ => (child_bag(0), &node.bag),
                    };
                    let mut expected = small.clone();
                    expected.push(v);
                    expected.sort_unstable();
                    if small.contains(&v) || &expected != big {
                        return Err(format!("node {i} does not change its bag by exactly vertex {v}"));
                    }
                }
                NiceKind::Join => {
                    if node.children.len() != 2 || child_bag(0) != &node.bag || child_bag(1) != &node.bag {
                        return Err(format!("join {i} needs two children with identical bags"));
                    }
                }
            }
        }
        if let Some(r) = self.root {
            if !self.nodes[r].bag.is_empty() || r + 1 != self.nodes.len() {
                return Err("root must be the last node and have an empty bag".into());
            }
        }
        Ok(())
    }

    /// For every introduce node of `v`: no neighbor of `v` sits strictly
    /// below it without also being in its bag.
    pub fn introduce_is_local(&self, g: &Graph) -> bool {
        // vertices seen anywhere in each subtree
        let mut below: Vec<Vec<usize>> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let mut seen: Vec<usize> = node.bag.clone();
            for &c in &node.children {
                seen.extend_from_slice(&below[c]);
            }
            seen.sort_unstable();
            seen.dedup();
            if let NiceKind::Introduce(v) = node.kind {
                let child = node.children[0];
                let leaks = below[child].iter().any(|&u| g.has_edge(u, v) && node.bag.binary_search(&u).is_err());
                if leaks {
                    return false;
                }
            }
            below.push(seen);
        }
        true
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forget then introduce until the bag of `from` (or nothing) becomes
    /// `target`. Returns `None` only when starting from nothing with an
    /// empty target.
    fn chain(&mut self, from: Option<usize>, target: &[usize]) -> Option<usize> {
        let (mut top, mut bag) = match from {
            Some(i) => (i, self.nodes[i].bag.clone()),
            None => {
                let &first = target.first()?;
                (self.push(NiceKind::Leaf, vec![first], vec![]), vec![first])
            }
        };
        let gone: Vec<usize> = bag.iter().copied().filter(|v| target.binary_search(v).is_err()).collect();
        for v in gone {
            bag.retain(|&u| u != v);
            top = self.push(NiceKind::Forget(v), bag.clone(), vec![top]);
        }
        let fresh: Vec<usize> = target.iter().copied().filter(|v| bag.binary_search(v).is_err()).collect();
        for v in fresh {
            let at = bag.binary_search(&v).unwrap_err();
            bag.insert(at, v);
            top = self.push(NiceKind::Introduce(v), bag.clone(), vec![top]);
        }
        Some(top)
    }
}

/// Converts a structurally valid decomposition into nice form with the same
/// width, rooted at node 0, with forget nodes above the root until its bag
/// is empty.
pub fn to_nice(td: &TreeDecomposition) -> Result<NiceDecomposition, Violation> {
    td.validate_structure()?;
    let count = td.node_count();
    if count == 0 {
        return Ok(NiceDecomposition { nodes: Vec::new(), root: None });
    }
    let adj = td.tree_adjacency();
    let mut parent = vec![usize::MAX; count];
    let mut order = Vec::with_capacity(count);
    let mut queue = VecDeque::from([0]);
    parent[0] = 0;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }

    let mut b = Builder { nodes: Vec::new() };
    let mut top: Vec<Option<usize>> = vec![None; count];
    for &x in order.iter().rev() {
        let bag = &td.bags()[x];
        let mut subtrees = Vec::new();
        for &y in adj[x].iter().filter(|&&y| parent[y] == x && y != x) {
            if let Some(t) = top[y] {
                subtrees.push(b.chain(Some(t), bag).expect("chain from an existing node"));
            }
        }
        top[x] = match subtrees.split_first() {
            None => b.chain(None, bag),
            Some((&first, rest)) => {
                Some(rest.iter().fold(first, |acc, &t| b.push(NiceKind::Join, bag.clone(), vec![acc, t])))
            }
        };
    }
    let root = top[0].map(|t| b.chain(Some(t), &[]).expect("chain from an existing node"));
    Ok(NiceDecomposition { nodes: b.nodes, root })
}
