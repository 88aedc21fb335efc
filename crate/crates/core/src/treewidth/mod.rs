//! Dynamic programming over nice tree decompositions: any local problem in
//! `O*(2^tw)` given a decomposition of width `tw`.

mod decomposition;
mod dp;
mod heuristic;
mod nice;

pub use decomposition::{parse_decomposition, TreeDecomposition, Violation};
pub use dp::{solve_tw, DpStats};
pub use heuristic::{decomposition_from_order, heuristic_decomposition, min_degree_order};
pub use nice::{to_nice, NiceDecomposition, NiceKind, NiceNode};
