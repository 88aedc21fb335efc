//! Objective calculus for local partitioning problems: exact values, vertex
//! contributions, the degrading test and goal-aware comparison.
//!
//! Every value is kept as an integer numerator over a per-problem `scale`
//! (twice the lcm of the coefficient denominators), so `α1·m1 + α2·m2` and
//! the half-weighted contribution `½α1·|E(v,T)| + α2·|E(v,V∖T)|` are both
//! exact integers and every comparison is an integer comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Goal {
    Min,
    Max,
}

impl Goal {
    /// Strict "a is better than b".
    pub fn better(self, a: Value, b: Value) -> bool {
        match self {
            Goal::Min => a < b,
            Goal::Max => a > b,
        }
    }

    /// `value` meets threshold `p` (at most `p` for min, at least for max).
    pub fn meets(self, value: Value, p: Value) -> bool {
        match self {
            Goal::Min => value <= p,
            Goal::Max => value >= p,
        }
    }

    /// Orders values best-first.
    pub fn rank(self, a: Value, b: Value) -> Ordering {
        match self {
            Goal::Min => a.cmp(&b),
            Goal::Max => b.cmp(&a),
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Goal::Min => "min",
            Goal::Max => "max",
        })
    }
}

/// Scaled objective value; meaningful only together with its problem's scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Value(pub i64);

impl std::ops::Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value(self.0 - rhs.0)
    }
}

impl std::iter::Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        Value(iter.map(|v| v.0).sum())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("unknown preset or malformed spec `{0}`")]
    Malformed(String),
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("spec is missing `{0}`")]
    Missing(&'static str),
}

/// A local problem `L(goal, α1, α2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    goal: Goal,
    alpha1: Rational,
    alpha2: Rational,
    scale: i64,
    // α·scale, both even
    w1: i64,
    w2: i64,
}

impl ProblemSpec {
    pub fn new(goal: Goal, alpha1: Rational, alpha2: Rational) -> Self {
        let scale = 2 * alpha1.denom().lcm(alpha2.denom());
        let w1 = (alpha1 * scale).to_integer();
        let w2 = (alpha2 * scale).to_integer();
        ProblemSpec { goal, alpha1, alpha2, scale, w1, w2 }
    }

    pub fn from_ints(goal: Goal, alpha1: i64, alpha2: i64) -> Self {
        ProblemSpec::new(goal, Rational::from_integer(alpha1), Rational::from_integer(alpha2))
    }

    /// k-densest subgraph: `(max, 1, 0)`.
    pub fn densest() -> Self {
        ProblemSpec::from_ints(Goal::Max, 1, 0)
    }

    /// k-sparsest subgraph: `(min, 1, 0)`.
    pub fn sparsest() -> Self {
        ProblemSpec::from_ints(Goal::Min, 1, 0)
    }

    /// max (k, n-k)-cut: `(max, 0, 1)`.
    pub fn max_cut() -> Self {
        ProblemSpec::from_ints(Goal::Max, 0, 1)
    }

    /// min (k, n-k)-cut: `(min, 0, 1)`.
    pub fn min_cut() -> Self {
        ProblemSpec::from_ints(Goal::Min, 0, 1)
    }

    /// max k-vertex cover / k-coverage: `(max, 1, 1)`.
    pub fn coverage() -> Self {
        ProblemSpec::from_ints(Goal::Max, 1, 1)
    }

    /// The five named presets with their CLI names.
    pub fn presets() -> [(&'static str, ProblemSpec); 5] {
        [
            ("densest", ProblemSpec::densest()),
            ("sparsest", ProblemSpec::sparsest()),
            ("max-cut", ProblemSpec::max_cut()),
            ("min-cut", ProblemSpec::min_cut()),
            ("coverage", ProblemSpec::coverage()),
        ]
    }

    pub fn goal(&self) -> Goal {
        self.goal
    }

    pub fn alpha1(&self) -> Rational {
        self.alpha1
    }

    pub fn alpha2(&self) -> Rational {
        self.alpha2
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `α1·scale`.
    pub fn weight_inner(&self) -> i64 {
        self.w1
    }

    /// `α2·scale`.
    pub fn weight_cut(&self) -> i64 {
        self.w2
    }

    /// `α2 ≥ α1/2` for max, `α2 ≤ α1/2` for min.
    pub fn is_degrading(&self) -> bool {
        let twice = self.alpha2 * 2;
        match self.goal {
            Goal::Max => twice >= self.alpha1,
            Goal::Min => twice <= self.alpha1,
        }
    }

    /// Value of a set with `m1` inner and `m2` crossing edges.
    pub fn value_of_counts(&self, m1: usize, m2: usize) -> Value {
        Value(self.w1 * m1 as i64 + self.w2 * m2 as i64)
    }

    /// `val(S) = α1·|E(S)| + α2·|E(S, V∖S)|`.
    pub fn value(&self, g: &Graph, set: &VertexSet) -> Value {
        self.value_of_counts(g.edges_within(set), g.edges_crossing(set))
    }

    /// `δ(v, T) = ½α1·|E({v},T)| + α2·|E({v},V∖T)|`, for `v ∈ T`.
    pub fn contribution(&self, g: &Graph, v: usize, set: &VertexSet) -> Value {
        assert!(set.contains(v), "contribution of {v} requires it to be in the set");
        let inside = g.degree_into(v, set);
        self.contribution_of_counts(inside, g.degree(v) - inside)
    }

    /// Contribution of a vertex with `inside` neighbors in its set and
    /// `outside` neighbors out of it.
    pub fn contribution_of_counts(&self, inside: usize, outside: usize) -> Value {
        Value(self.w1 / 2 * inside as i64 + self.w2 * outside as i64)
    }

    /// Converts a threshold given in objective units to the scaled domain.
    /// Thresholds that do not land on the scale grid are rounded towards
    /// the feasible side, which leaves every decision unchanged.
    pub fn threshold(&self, p: Rational) -> Value {
        let scaled = p * self.scale;
        Value(match self.goal {
            Goal::Min => scaled.floor().to_integer(),
            Goal::Max => scaled.ceil().to_integer(),
        })
    }

    /// The exact objective value a scaled `Value` stands for.
    pub fn to_rational(&self, value: Value) -> Rational {
        Rational::new(value.0, self.scale)
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "goal={},a1={},a2={}", self.goal, self.alpha1, self.alpha2)
    }
}

impl FromStr for ProblemSpec {
    type Err = SpecError;

    /// A preset name or `goal=max,a1=1,a2=1/2`.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        let s = s.trim();
        if let Some((_, spec)) = ProblemSpec::presets().into_iter().find(|(name, _)| *name == s) {
            return Ok(spec);
        }
        let (mut goal, mut a1, mut a2) = (None, None, None);
        for part in s.split(',') {
            let (key, val) = part.split_once('=').ok_or_else(|| SpecError::Malformed(s.to_string()))?;
            match key.trim() {
                "goal" => {
                    goal = Some(match val.trim() {
                        "min" => Goal::Min,
                        "max" => Goal::Max,
                        _ => return Err(SpecError::Malformed(s.to_string())),
                    })
                }
                "a1" => a1 = Some(parse_rational(val)?),
                "a2" => a2 = Some(parse_rational(val)?),
                _ => return Err(SpecError::Malformed(s.to_string())),
            }
        }
        Ok(ProblemSpec::new(
            goal.ok_or(SpecError::Missing("goal"))?,
            a1.ok_or(SpecError::Missing("a1"))?,
            a2.ok_or(SpecError::Missing("a2"))?,
        ))
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, SpecError> {
    let text = text.trim();
    let bad = || SpecError::BadRational(text.to_string());
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => text.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Which routine produced a [`Solution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Alg1,
    Alg2,
    TreeDecomposition,
    VertexCover,
    SwapConstruct,
    DegreeConstruct,
    MinCutPk,
    MinCutNp,
    GreedyTopK,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Alg1 => "alg1",
            Method::Alg2 => "alg2",
            Method::TreeDecomposition => "tw",
            Method::VertexCover => "vc",
            Method::SwapConstruct => "swap",
            Method::DegreeConstruct => "degree-construct",
            Method::MinCutPk => "pk",
            Method::MinCutNp => "np",
            Method::GreedyTopK => "greedy-top-k",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A feasible set with its recomputed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub vertices: VertexSet,
    pub value: Value,
    pub method: Method,
}

impl Solution {
    pub fn evaluate(spec: &ProblemSpec, g: &Graph, vertices: VertexSet, method: Method) -> Self {
        let value = spec.value(g, &vertices);
        Solution { vertices, value, method }
    }

    /// Best-first total order: value under `goal`, then lexicographically
    /// smaller vertex set.
    pub fn rank(&self, other: &Solution, goal: Goal) -> Ordering {
        goal.rank(self.value, other.value).then_with(|| self.vertices.cmp_lex(&other.vertices))
    }
}

/// Keeps the better of two optional solutions under [`Solution::rank`].
pub fn pick_best(goal: Goal, a: Option<Solution>, b: Option<Solution>) -> Option<Solution> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.rank(&a, goal) == Ordering::Less { b } else { a }),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Outcome of a decision query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Solution),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(&self) -> Option<&Solution> {
        match self {
            Decision::Yes(s) => Some(s),
            Decision::No => None,
        }
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
    fn values_on_k3() {
        let g = k3();
        let densest = ProblemSpec::densest();
        let s = set(3, &[0, 1]);
        assert_eq!(densest.to_rational(densest.value(&g, &s)), Rational::from_integer(1));
        let cut = ProblemSpec::max_cut();
        assert_eq!(cut.to_rational(cut.value(&g, &s)), Rational::from_integer(2));
        for (_, spec) in ProblemSpec::presets() {
            assert_eq!(spec.value(&g, &set(3, &[])), Value(0));
        }
    }

    #[test]
    fn contribution_examples() {
        let g = k3();
        let both = ProblemSpec::from_ints(Goal::Max, 1, 1);
        let c = both.contribution(&g, 1, &set(3, &[0, 1]));
        assert_eq!(both.scale(), 2);
        assert_eq!(c, Value(3));
        assert_eq!(both.to_rational(c), Rational::new(3, 2));

        let lonely = Graph::empty(2);
        assert_eq!(both.contribution(&lonely, 0, &set(2, &[0])), Value(0));

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cut = ProblemSpec::max_cut();
        assert_eq!(cut.to_rational(cut.contribution(&star, 0, &set(4, &[0]))), Rational::from_integer(3));
    }

    #[test]
    #[should_panic]
    fn contribution_requires_membership() {
        ProblemSpec::coverage().contribution(&k3(), 2, &set(3, &[0]));
    }

    #[test]
    fn degrading_classification() {
        assert!(ProblemSpec::max_cut().is_degrading());
        assert!(ProblemSpec::coverage().is_degrading());
        assert!(ProblemSpec::sparsest().is_degrading());
        assert!(!ProblemSpec::densest().is_degrading());
        assert!(!ProblemSpec::min_cut().is_degrading());
        let boundary = ProblemSpec::new(Goal::Max, Rational::from_integer(1), Rational::new(1, 2));
        assert!(boundary.is_degrading());
        let boundary_min = ProblemSpec::new(Goal::Min, Rational::from_integer(1), Rational::new(1, 2));
        assert!(boundary_min.is_degrading());
    }

    #[test]
    fn scale_absorbs_denominators() {
        let spec = ProblemSpec::new(Goal::Min, Rational::new(-2, 3), Rational::new(5, 4));
        assert_eq!(spec.scale(), 24);
        assert_eq!(spec.weight_inner(), -16);
        assert_eq!(spec.weight_cut(), 30);
        assert_eq!(spec.weight_inner() % 2, 0);
    }

    #[test]
    fn parses_presets_and_explicit_specs() {
        assert_eq!("coverage".parse::<ProblemSpec>().unwrap(), ProblemSpec::coverage());
        assert_eq!("max-cut".parse::<ProblemSpec>().unwrap(), ProblemSpec::max_cut());
        let s: ProblemSpec = "goal=min,a1=1/2,a2=-3".parse().unwrap();
        assert_eq!(s.goal(), Goal::Min);
        assert_eq!(s.alpha1(), Rational::new(1, 2));
        assert_eq!(s.alpha2(), Rational::from_integer(-3));
        assert!("goal=up,a1=1,a2=1".parse::<ProblemSpec>().is_err());
        assert!("goal=max,a1=1".parse::<ProblemSpec>().is_err());
        assert!("goal=max,a1=1/0,a2=1".parse::<ProblemSpec>().is_err());
        assert_eq!(s.to_string().parse::<ProblemSpec>().unwrap(), s);
    }

    #[test]
    fn goal_comparisons_and_thresholds() {
        assert!(Goal::Min.better(Value(1), Value(2)));
        assert!(!Goal::Min.better(Value(2), Value(2)));
        assert!(Goal::Max.better(Value(3), Value(2)));
        let spec = ProblemSpec::new(Goal::Max, Rational::new(1, 3), Rational::from_integer(0));
        // scale 6: p = 1/2 -> 3, p = 1/4 -> 1.5 rounded up to 2
        assert_eq!(spec.threshold(Rational::new(1, 2)), Value(3));
        assert_eq!(spec.threshold(Rational::new(1, 4)), Value(2));
        let spec = ProblemSpec::min_cut();
        assert_eq!(spec.threshold(Rational::new(3, 4)), Value(1));
    }

    #[test]
    fn ties_break_lexicographically() {
        let g = k3();
        let spec = ProblemSpec::coverage();
        let a = Solution::evaluate(&spec, &g, set(3, &[0, 2]), Method::Oracle);
        let b = Solution::evaluate(&spec, &g, set(3, &[0, 1]), Method::Oracle);
        let best = pick_best(spec.goal(), Some(a), Some(b.clone())).unwrap();
        assert_eq!(best.vertices, b.vertices);
    }
}
