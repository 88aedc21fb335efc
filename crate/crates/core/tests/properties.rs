use std::collections::BTreeSet;

use locpart::branching::{alg1, alg2, alg2_with, Alg2Branching};
use locpart::cut::{min_cut_np, min_cut_pk, swap_construct};
use locpart::oracle::{brute_force_opt, decide};
use locpart::treewidth::{heuristic_decomposition, solve_tw, to_nice};
use locpart::vertex_cover::solve_vc;
use locpart::{Exec, Goal, Graph, ProblemSpec, Rational, Value, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn instance(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0..=n)
    })
}

fn spec() -> impl Strategy<Value = ProblemSpec> {
    (any::<bool>(), 0i64..=6, 1i64..=4, 0i64..=6, 1i64..=4).prop_map(|(max, a, b, c, d)| {
        let goal = if max { Goal::Max } else { Goal::Min };
        ProblemSpec::new(goal, Rational::new(a, b), Rational::new(c, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn alg1_matches_oracle_when_degrading((g, k) in instance(8), spec in spec()) {
        prop_assume!(spec.is_degrading());
        let (sol, _) = alg1(&spec, &g, k, &Exec::serial()).unwrap();
        prop_assert_eq!(sol.value, brute_force_opt(&spec, &g, k).unwrap().value);
        prop_assert_eq!(sol.vertices.len(), k);
    }

    #[test]
    fn alg2_matches_oracle_when_not_degrading((g, k) in instance(8), spec in spec()) {
        prop_assume!(!spec.is_degrading());
        let (sol, _) = alg2(&spec, &g, k, &Exec::serial()).unwrap();
        prop_assert_eq!(sol.value, brute_force_opt(&spec, &g, k).unwrap().value);
    }

    #[test]
    fn closed_neighborhood_branching_matches_oracle((g, k) in instance(8), spec in spec()) {
        let (sol, _) = alg2_with(&spec, &g, k, Alg2Branching::ClosedNeighborhood, &Exec::serial()).unwrap();
        prop_assert_eq!(sol.value, brute_force_opt(&spec, &g, k).unwrap().value);
    }

    #[test]
    fn vertex_cover_solver_matches_oracle((g, k) in instance(8), spec in spec()) {
        let (sol, _) = solve_vc(&spec, &g, k, &Exec::serial()).unwrap();
        prop_assert_eq!(sol.value, brute_force_opt(&spec, &g, k).unwrap().value);
    }

    #[test]
    fn treewidth_dp_matches_oracle((g, k) in instance(8), spec in spec()) {
        let nice = to_nice(&heuristic_decomposition(&g)).unwrap();
        let (sol, _) = solve_tw(&spec, &g, &nice, k, &Exec::serial()).unwrap();
        prop_assert_eq!(sol.value, brute_force_opt(&spec, &g, k).unwrap().value);
        prop_assert_eq!(spec.value(&g, &sol.vertices), sol.value);
    }

    #[test]
    fn optimum_is_invariant_under_relabeling((g, k) in instance(7), spec in spec(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (v as u64).wrapping_mul(seed | 1).rotate_left(17));
        let h = g.relabel(&perm);
        prop_assert_eq!(h.m(), g.m());
        prop_assert_eq!(
            brute_force_opt(&spec, &h, k).unwrap().value,
            brute_force_opt(&spec, &g, k).unwrap().value
        );
    }

    #[test]
    fn cut_is_symmetric_in_k((g, k) in instance(8)) {
        let n = g.n();
        for spec in [ProblemSpec::max_cut(), ProblemSpec::min_cut()] {
            prop_assert_eq!(
                brute_force_opt(&spec, &g, k).unwrap().value,
                brute_force_opt(&spec, &g, n - k).unwrap().value
            );
        }
    }

    #[test]
    fn swapping_reaches_the_cut_bound((g, k) in instance(9)) {
        let out = swap_construct(&g, k).unwrap();
        let cut = g.edges_crossing(&out.solution.vertices);
        prop_assert!(cut >= (g.n() - k).min(g.min_degree() * k));
        prop_assert!(out.trace.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn min_cut_deciders_agree_with_oracle((g, k) in instance(7), p in 0i64..8) {
        let spec = ProblemSpec::min_cut();
        let truth = decide(&spec, &g, k, Value(p * spec.scale())).unwrap().is_yes();
        let (pk, _) = min_cut_pk(&g, k, p, &Exec::serial()).unwrap();
        prop_assert_eq!(pk.is_yes(), truth);
        if p <= k as i64 {
            prop_assert_eq!(min_cut_np(&g, k, p, &Exec::serial()).unwrap().is_yes(), truth);
        }
    }

    #[test]
    fn connected_sets_are_complete_and_distinct(g in graph(7), max_size in 1usize..=4) {
        let mut seen = BTreeSet::new();
        for root in 0..g.n() {
            for set in g.connected_sets(root, max_size).unwrap() {
                prop_assert_eq!(set.iter().next(), Some(root));
                prop_assert!(g.is_connected_set(&set));
                prop_assert!(seen.insert(set.to_vec()));
            }
        }
        let n = g.n();
        let expected = (1u32..1 << n)
            .map(|mask| VertexSet::from_slice(n, &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>()))
            .filter(|s| s.len() <= max_size && g.is_connected_set(s))
            .count();
        prop_assert_eq!(seen.len(), expected);
    }
}
