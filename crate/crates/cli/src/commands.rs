use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use locpart::approx::{approx_max_cut, approx_min_cut, ApproxResult, MinCutApprox};
use locpart::branching::{alg1, alg2_with, Alg2Branching, BranchStats};
use locpart::cut::{max_cut_standard, min_cut_np, min_cut_pk};
use locpart::oracle::{binomial, Oracle, DEFAULT_BUDGET};
use locpart::problem::parse_rational;
use locpart::treewidth::{heuristic_decomposition, parse_decomposition, solve_tw, to_nice, TreeDecomposition};
use locpart::vertex_cover::solve_vc;
use locpart::{parse_graph, Decision, Exec, Goal, Graph, ProblemSpec, Rational, Solution, SolveError};
use serde_json::{json, Value as Json};

use crate::exit::{Incompatible, InputError, Outcome};
use crate::{ApproxArgs, CutObjective, EnumArgs, MethodArg, SolveArgs, ValidateArgs};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())).into())
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    parse_graph(&text).map_err(|e| InputError(format!("{}: {e}", path.display())).into())
}

fn read_decomposition(path: &Path) -> Result<TreeDecomposition> {
    let text = read(path)?;
    parse_decomposition(&text).map_err(|e| InputError(format!("{}: {e}", path.display())).into())
}

fn parse_spec(text: &str) -> Result<ProblemSpec> {
    text.parse().map_err(|e| anyhow!("invalid --spec {text:?}: {e}"))
}

fn parse_ratio(flag: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| anyhow!("invalid {flag} {text:?}: {e}"))
}

fn print_report(report: &Json) {
    println!("{}", serde_json::to_string_pretty(report).expect("reports are plain JSON"));
}

fn is_cut(spec: &ProblemSpec, goal: Goal) -> bool {
    spec.goal() == goal && spec.alpha1() == Rational::from_integer(0) && spec.alpha2() == Rational::from_integer(1)
}

fn branch_json(s: &BranchStats) -> Json {
    json!({ "nodes_visited": s.nodes_visited, "max_depth": s.max_depth, "leaves": s.leaves })
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn resolve_method(args: &SolveArgs, spec: &ProblemSpec, trace: &mut Vec<String>) -> MethodArg {
    if args.method != MethodArg::Auto {
        return args.method;
    }
    let (method, why) = if args.td.is_some() {
        (MethodArg::Tw, "a decomposition was supplied")
    } else if spec.is_degrading() {
        (MethodArg::Alg1, "spec is degrading")
    } else {
        (MethodArg::Alg2, "spec is not degrading")
    };
    trace.push(format!("auto -> {} ({why})", method_name(method)));
    method
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Auto => "auto",
        MethodArg::Alg1 => "alg1",
        MethodArg::Alg2 => "alg2",
        MethodArg::Alg2Nbhd => "alg2-nbhd",
        MethodArg::Tw => "tw",
        MethodArg::Vc => "vc",
        MethodArg::Oracle => "oracle",
        MethodArg::Np => "np",
        MethodArg::Pk => "pk",
        MethodArg::Standard => "standard",
    }
}

/// Integer cut threshold equivalent to `p`.
fn cut_threshold(p: Rational, goal: Goal) -> i64 {
    match goal {
        Goal::Max => p.ceil().to_integer(),
        Goal::Min => p.floor().to_integer(),
    }
}

enum Run {
    Optimum(Solution),
    Decided(Decision),
}

pub fn solve(args: &SolveArgs) -> Result<Outcome> {
    let g = read_graph(&args.graph)?;
    let spec = parse_spec(&args.spec)?;
    let p = args.p.as_deref().map(|t| parse_ratio("--p", t)).transpose()?;
    let exec = Exec::with_threads(args.threads);
    let mut trace = Vec::new();
    let method = resolve_method(args, &spec, &mut trace);

    let need_cut = |goal: Goal| -> Result<i64> {
        if !is_cut(&spec, goal) {
            let which = if goal == Goal::Max { "max-cut" } else { "min-cut" };
            return Err(Incompatible(format!("method {} only solves the {which} spec", method_name(method))).into());
        }
        let p = p.ok_or_else(|| Incompatible(format!("method {} needs --p", method_name(method))))?;
        Ok(cut_threshold(p, goal))
    };

    let start = Instant::now();
    let (run, stats) = match method {
        MethodArg::Auto => unreachable!("auto is resolved above"),
        MethodArg::Alg1 => {
            let (s, st) = alg1(&spec, &g, args.k, &exec)?;
            (Run::Optimum(s), branch_json(&st))
        }
        MethodArg::Alg2 | MethodArg::Alg2Nbhd => {
            let branching =
                if method == MethodArg::Alg2 { Alg2Branching::Members } else { Alg2Branching::ClosedNeighborhood };
            let (s, st) = alg2_with(&spec, &g, args.k, branching, &exec)?;
            (Run::Optimum(s), branch_json(&st))
        }
        MethodArg::Tw => {
            let td = match &args.td {
                Some(path) => read_decomposition(path)?,
                None => {
                    trace.push("tw: min-degree heuristic decomposition".into());
                    heuristic_decomposition(&g)
                }
            };
            let nice = to_nice(&td).map_err(SolveError::InvalidDecomposition)?;
            let (s, st) = solve_tw(&spec, &g, &nice, args.k, &exec)?;
            let stats = json!({
                "width": nice.width(),
                "nodes": st.nodes,
                "max_rows": st.max_rows,
                "total_entries": st.total_entries,
            });
            (Run::Optimum(s), stats)
        }
        MethodArg::Vc => {
            let (s, st) = solve_vc(&spec, &g, args.k, &exec)?;
            (Run::Optimum(s), json!({ "tau": st.tau, "subsets_examined": st.subsets_examined }))
        }
        MethodArg::Oracle => {
            let oracle = Oracle::with_budget(args.budget.unwrap_or(DEFAULT_BUDGET));
            let s = oracle.optimum(&spec, &g, args.k, &exec)?;
            (Run::Optimum(s), json!({ "subsets_examined": binomial(g.n(), args.k).to_string() }))
        }
        MethodArg::Np => {
            let p = need_cut(Goal::Min)?;
            (Run::Decided(min_cut_np(&g, args.k, p, &exec)?), json!({}))
        }
        MethodArg::Pk => {
            let p = need_cut(Goal::Min)?;
            let (d, st) = min_cut_pk(&g, args.k, p, &exec)?;
            (Run::Decided(d), branch_json(&st))
        }
        MethodArg::Standard => {
            let p = need_cut(Goal::Max)?;
            let out = max_cut_standard(&g, args.k, p, &exec)?;
            for (stage, cut) in &out.trace {
                trace.push(format!("{}: cut {cut}", stage.name()));
            }
            trace.push(format!("decided by {}", out.decided_by.name()));
            (Run::Decided(out.decision), json!({}))
        }
    };
    let time_ms = millis(start);

    let mut report = json!({
        "command": "solve",
        "spec": spec.to_string(),
        "n": g.n(),
        "m": g.m(),
        "k": args.k,
        "method": method_name(method),
        "trace": trace,
        "stats": stats,
        "time_ms": time_ms,
    });
    let decision = match run {
        Run::Optimum(s) => {
            report["value"] = json!(spec.to_rational(s.value).to_string());
            report["vertices"] = json!(s.vertices.to_vec());
            p.map(|p| if spec.goal().meets(s.value, spec.threshold(p)) { Decision::Yes(s) } else { Decision::No })
        }
        Run::Decided(d) => Some(d),
    };
    let outcome = match decision {
        None => {
            eprintln!(
                "{}: value {} over {} vertices in {time_ms:.2} ms",
                method_name(method),
                report["value"].as_str().unwrap_or("?"),
                args.k
            );
            Outcome::Done
        }
        Some(d) => {
            report["p"] = json!(p.expect("decisions need p").to_string());
            report["decision"] = json!(if d.is_yes() { "yes" } else { "no" });
            report["witness"] = match d.witness() {
                Some(w) => json!({
                    "vertices": w.vertices.to_vec(),
                    "value": spec.to_rational(w.value).to_string(),
                }),
                None => Json::Null,
            };
            eprintln!("{}: {} in {time_ms:.2} ms", method_name(method), report["decision"].as_str().unwrap());
            if d.is_yes() {
                Outcome::Yes
            } else {
                Outcome::No
            }
        }
    };
    print_report(&report);
    Ok(outcome)
}

fn approx_json(r: &ApproxResult, spec: &ProblemSpec) -> Json {
    json!({
        "mode": r.mode.name(),
        "guarantee": r.guarantee.to_string(),
        "degree_bound": r.degree_bound,
        "value": spec.to_rational(r.solution.value).to_string(),
        "vertices": r.solution.vertices.to_vec(),
    })
}

pub fn approx(args: &ApproxArgs) -> Result<Outcome> {
    let g = read_graph(&args.graph)?;
    let exec = Exec::with_threads(args.threads);
    let start = Instant::now();
    let (mut report, outcome) = match args.objective {
        CutObjective::MaxCut => {
            let eps = parse_ratio("--epsilon", &args.epsilon)?;
            let r = approx_max_cut(&g, args.k, eps, &exec)?;
            let mut report = approx_json(&r, &ProblemSpec::max_cut());
            report["epsilon"] = json!(eps.to_string());
            (report, Outcome::Done)
        }
        CutObjective::MinCut => {
            let oracle = Oracle::with_budget(args.budget.unwrap_or(DEFAULT_BUDGET));
            match approx_min_cut(&g, args.k, &oracle, &exec)? {
                MinCutApprox::Solved(r) => (approx_json(&r, &ProblemSpec::min_cut()), Outcome::Done),
                MinCutApprox::Unsupported { n, k } => (
                    json!({
                        "mode": "unsupported",
                        "reason": format!("2^{k} < n = {n}: only the randomized regime applies; try `solve --method pk`"),
                    }),
                    Outcome::Unsupported,
                ),
            }
        }
    };
    let time_ms = millis(start);
    report["command"] = json!("approx");
    report["k"] = json!(args.k);
    report["time_ms"] = json!(time_ms);
    eprintln!("approx: mode {} in {time_ms:.2} ms", report["mode"].as_str().unwrap_or("?"));
    print_report(&report);
    Ok(outcome)
}

pub fn enumerate(args: &EnumArgs) -> Result<Outcome> {
    let g = read_graph(&args.graph)?;
    let sets: Vec<Vec<usize>> = g.connected_sets(args.root, args.max_size)?.map(|s| s.to_vec()).collect();
    let mut report = json!({
        "command": "enum",
        "root": args.root,
        "max_size": args.max_size,
        "count": sets.len(),
    });
    if args.list {
        report["sets"] = json!(sets);
    }
    eprintln!("enum: {} connected sets rooted at {}", sets.len(), args.root);
    print_report(&report);
    Ok(Outcome::Done)
}

pub fn validate_td(args: &ValidateArgs) -> Result<Outcome> {
    let g = read_graph(&args.graph)?;
    let td = read_decomposition(&args.td).with_context(|| "while reading the decomposition")?;
    let (report, outcome) = match td.validate(&g) {
        Ok(()) => {
            eprintln!("ok width {}", td.width());
            (json!({ "valid": true, "width": td.width(), "nodes": td.node_count() }), Outcome::Done)
        }
        Err(v) => {
            eprintln!("invalid: {v}");
            (
                json!({ "valid": false, "violation": v.to_string(), "condition": v.condition() }),
                Outcome::InvalidDecomposition,
            )
        }
    };
    print_report(&report);
    Ok(outcome)
}
