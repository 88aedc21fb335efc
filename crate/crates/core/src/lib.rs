//! Exact, parameterized and approximate solvers for local graph
//! partitioning problems: pick exactly `k` vertices optimizing
//! `α1·|E(V′)| + α2·|E(V′, V∖V′)|`.

pub mod approx;
pub mod branching;
pub mod cut;
mod error;
pub mod exec;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod problem;
pub mod treewidth;
pub mod vertex_cover;

pub use error::SolveError;
pub use exec::Exec;
pub use graph::{parse_graph, Graph, GraphError, ParseError, VertexSet};
pub use problem::{Decision, Goal, Method, ProblemSpec, Rational, Solution, Value};
