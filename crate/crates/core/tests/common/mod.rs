#![allow(dead_code)]

use locpart::generate::erdos_renyi_capped;
use locpart::{Goal, Graph, ProblemSpec, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` graphs with `1 ≤ n ≤ max_n` and maximum degree at most `max_degree`.
pub fn corpus(seed: u64, count: usize, max_n: usize, max_degree: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let prob = rng.gen_range(0.15..0.8);
            erdos_renyi_capped(n, prob, max_degree, &mut rng)
        })
        .collect()
}

pub fn degrading_presets() -> Vec<(&'static str, ProblemSpec)> {
    ProblemSpec::presets().into_iter().filter(|(_, s)| s.is_degrading()).collect()
}

pub fn all_presets() -> Vec<(String, ProblemSpec)> {
    ProblemSpec::presets().into_iter().map(|(name, s)| (name.to_string(), s)).collect()
}

/// Presets plus `per_goal` random non-negative rational weightings per goal.
pub fn presets_and_random_specs(seed: u64, per_goal: usize) -> Vec<(String, ProblemSpec)> {
    let mut rng = rng(seed);
    let mut specs = all_presets();
    for goal in [Goal::Min, Goal::Max] {
        for _ in 0..per_goal {
            let mut pick = || Rational::new(rng.gen_range(0..=6), rng.gen_range(1..=4));
            let spec = ProblemSpec::new(goal, pick(), pick());
            specs.push((spec.to_string(), spec));
        }
    }
    specs
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
