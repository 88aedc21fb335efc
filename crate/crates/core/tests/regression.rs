//! Replays recorded counterexamples. Each fixture is an edge list preceded
//! by `# key value` header lines.

use std::path::Path;

use locpart::branching::{alg1, alg1_with, alg2, alg2_with, Alg1Pivot, Alg2Branching};
use locpart::oracle::brute_force_opt;
use locpart::{parse_graph, Exec, Graph, ProblemSpec, Rational};

struct Case {
    spec: ProblemSpec,
    k: usize,
    oracle: Rational,
    graph: Graph,
}

fn header<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix("# ")?.strip_prefix(key)?.strip_prefix(' '))
        .unwrap_or_else(|| panic!("missing header {key}"))
}

fn parse_case(text: &str) -> Case {
    let oracle = header(text, "oracle").split_whitespace().next().unwrap();
    Case {
        spec: header(text, "spec").parse().unwrap(),
        k: header(text, "k").parse().unwrap(),
        oracle: oracle.parse().unwrap(),
        graph: parse_graph(text).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn value(spec: &ProblemSpec, solution: &locpart::Solution) -> Rational {
    spec.to_rational(solution.value)
}

#[test]
fn member_branching_counterexample() {
    let c = parse_case(&fixture("alg2_member_branching.el"));
    let exec = Exec::serial();
    assert_eq!(value(&c.spec, &brute_force_opt(&c.spec, &c.graph, c.k).unwrap()), c.oracle);
    let (members, _) = alg2(&c.spec, &c.graph, c.k, &exec).unwrap();
    assert_eq!(value(&c.spec, &members), Rational::from_integer(4));
    let (nbhd, _) = alg2_with(&c.spec, &c.graph, c.k, Alg2Branching::ClosedNeighborhood, &exec).unwrap();
    assert_eq!(value(&c.spec, &nbhd), c.oracle);
}

#[test]
fn contribution_pivot_counterexample() {
    let c = parse_case(&fixture("alg1_contribution_pivot.el"));
    let exec = Exec::serial();
    let (share, _) = alg1_with(&c.spec, &c.graph, c.k, Alg1Pivot::Contribution, &exec).unwrap();
    assert_eq!(value(&c.spec, &share), Rational::from_integer(1));
    let (gain, _) = alg1(&c.spec, &c.graph, c.k, &exec).unwrap();
    assert_eq!(value(&c.spec, &gain), c.oracle);
}

#[test]
fn recorded_alg2_mismatches_are_degrading_and_solved_by_the_neighborhood_variant() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/alg2_mismatches.txt");
    let Ok(text) = std::fs::read_to_string(path) else { return };
    for block in text.split("\n\n").filter(|b| !b.trim().is_empty()) {
        let c = parse_case(block);
        assert!(c.spec.is_degrading(), "unexpected mismatch for {}", c.spec);
        let opt = brute_force_opt(&c.spec, &c.graph, c.k).unwrap();
        assert_eq!(value(&c.spec, &opt), c.oracle);
        let (nbhd, _) = alg2_with(&c.spec, &c.graph, c.k, Alg2Branching::ClosedNeighborhood, &Exec::serial()).unwrap();
        assert_eq!(nbhd.value, opt.value);
    }
}
