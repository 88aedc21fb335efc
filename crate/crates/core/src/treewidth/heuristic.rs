use crate::graph::{Graph, VertexSet};

use super::decomposition::TreeDecomposition;

/// Greedy minimum-degree elimination order on the filled graph, smallest id
/// among ties.
pub fn min_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rows: Vec<VertexSet> = (0..n).map(|v| g.neighbor_set(v).clone()).collect();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive.iter().min_by_key(|&v| (rows[v].len(), v)).expect("a live vertex remains");
        eliminate(&mut rows, &mut alive, v);
        order.push(v);
    }
    order
}

fn eliminate(rows: &mut [VertexSet], alive: &mut VertexSet, v: usize) -> Vec<usize> {
    let nbrs = rows[v].to_vec();
    for &a in &nbrs {
        for &b in &nbrs {
            if a != b {
                rows[a].insert(b);
            }
        }
        rows[a].remove(v);
    }
    alive.remove(v);
    nbrs
}

/// Decomposition induced by eliminating vertices in `order`: one bag
/// `{v} ∪ N⁺(v)` per vertex, attached to the bag of the earliest-eliminated
/// higher neighbor. Roots of separate components are chained together.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n, "elimination order must list every vertex once");
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        assert_eq!(position[v], usize::MAX, "vertex {v} repeated in elimination order");
        position[v] = i;
    }
    let mut rows: Vec<VertexSet> = (0..n).map(|v| g.neighbor_set(v).clone()).collect();
    let mut alive = VertexSet::full(n);
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let nbrs = eliminate(&mut rows, &mut alive, v);
        match nbrs.iter().map(|&u| position[u]).min() {
            Some(parent) => edges.push((i, parent)),
            None => roots.push(i),
        }
        let mut bag = nbrs;
        bag.push(v);
        bags.push(bag);
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    TreeDecomposition::new(bags, edges)
}

/// Min-degree heuristic decomposition; its width only bounds treewidth from
/// above.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g, &min_degree_order(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths_of_small_graphs() {
        let tree = Graph::new(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let td = heuristic_decomposition(&tree);
        assert_eq!(td.width(), 1);
        assert_eq!(td.validate(&tree), Ok(()));

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(heuristic_decomposition(&k4).width(), 3);

        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let td = heuristic_decomposition(&c4);
        assert_eq!(td.width(), 2);
        assert_eq!(td.validate(&c4), Ok(()));
    }

    #[test]
    fn disconnected_and_empty_inputs() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let td = heuristic_decomposition(&g);
        assert_eq!(td.validate(&g), Ok(()));
        let empty = Graph::empty(0);
        assert_eq!(heuristic_decomposition(&empty).node_count(), 0);
    }

    #[test]
    fn arbitrary_orders_give_valid_decompositions() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        for order in [[0, 1, 2, 3, 4], [4, 3, 2, 1, 0], [2, 0, 4, 1, 3]] {
            assert_eq!(decomposition_from_order(&g, &order).validate(&g), Ok(()));
        }
    }
}
