//! Benchmark matrix. CSV schema v1, one row per (instance, k, spec, method):
//! `instance,n,m,max_degree,k,spec,method,value,nodes_visited,time_ms`.

use std::io::Write;
use std::time::Instant;

use anyhow::{Context, Result};
use locpart::branching::{alg1, alg2};
use locpart::generate::{erdos_renyi_capped, min_degree_graph, random_tree, split_graph};
use locpart::oracle::{binomial, Oracle};
use locpart::treewidth::{heuristic_decomposition, solve_tw, to_nice};
use locpart::vertex_cover::solve_vc;
use locpart::{Exec, Graph, ProblemSpec, Solution};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exit::Outcome;
use crate::{BenchArgs, Suite};

pub const HEADER: [&str; 10] =
    ["instance", "n", "m", "max_degree", "k", "spec", "method", "value", "nodes_visited", "time_ms"];

fn instances(suite: Suite, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = match suite {
        Suite::Smoke => 1,
        Suite::Standard => 2,
    };
    vec![
        ("er-capped".into(), erdos_renyi_capped(10 * scale, 0.4, 4, &mut rng)),
        ("tree".into(), random_tree(12 * scale, &mut rng)),
        ("split".into(), split_graph(3 + scale, 6 * scale, 0.5, &mut rng)),
        ("min-degree-2".into(), min_degree_graph(10 * scale, 2, 0.1, &mut rng)),
    ]
}

fn ks(suite: Suite) -> &'static [usize] {
    match suite {
        Suite::Smoke => &[2, 3],
        Suite::Standard => &[3, 4],
    }
}

type Measured = (Solution, u128);
type Runner = fn(&ProblemSpec, &Graph, usize) -> Measured;

fn methods() -> Vec<(&'static str, &'static str, Runner)> {
    vec![
        ("oracle", "max-cut", |s, g, k| {
            (Oracle::default().optimum(s, g, k, &Exec::serial()).unwrap(), binomial(g.n(), k))
        }),
        ("alg1", "max-cut", |s, g, k| {
            let (sol, st) = alg1(s, g, k, &Exec::serial()).unwrap();
            (sol, st.nodes_visited as u128)
        }),
        ("oracle", "densest", |s, g, k| {
            (Oracle::default().optimum(s, g, k, &Exec::serial()).unwrap(), binomial(g.n(), k))
        }),
        ("alg2", "densest", |s, g, k| {
            let (sol, st) = alg2(s, g, k, &Exec::serial()).unwrap();
            (sol, st.nodes_visited as u128)
        }),
        ("tw", "densest", |s, g, k| {
            let nice = to_nice(&heuristic_decomposition(g)).unwrap();
            let (sol, st) = solve_tw(s, g, &nice, k, &Exec::serial()).unwrap();
            (sol, st.total_entries as u128)
        }),
        ("vc", "densest", |s, g, k| {
            let (sol, st) = solve_vc(s, g, k, &Exec::serial()).unwrap();
            (sol, st.subsets_examined as u128)
        }),
    ]
}

pub fn run(args: &BenchArgs) -> Result<Outcome> {
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(std::io::stdout()),
    };
    let mut out = csv::Writer::from_writer(sink);
    out.write_record(HEADER)?;
    let mut rows = 0;
    for (name, g) in instances(args.suite, args.seed) {
        for &k in ks(args.suite) {
            for (method, spec_name, solve) in methods() {
                let spec: ProblemSpec = spec_name.parse().expect("preset name");
                let start = Instant::now();
                let (sol, nodes) = solve(&spec, &g, k);
                let time_ms = start.elapsed().as_secs_f64() * 1e3;
                out.write_record([
                    name.clone(),
                    g.n().to_string(),
                    g.m().to_string(),
                    g.max_degree().to_string(),
                    k.to_string(),
                    spec_name.to_string(),
                    method.to_string(),
                    spec.to_rational(sol.value).to_string(),
                    nodes.to_string(),
                    format!("{time_ms:.3}"),
                ])?;
                rows += 1;
            }
        }
    }
    out.flush()?;
    eprintln!("bench: {rows} rows");
    Ok(Outcome::Done)
}
