//! Shared fixtures for the benchmarks.

use hedonom_core::gen::random;
use hedonom_core::{Game, Instance, WeightClass};

/// `count` seeded instances with `n` agents.
pub fn instances(class: &WeightClass, n: usize, count: u64) -> Vec<Instance> {
    (0..count).map(|seed| random(Game::Ashg, class, n, seed).expect("generator parameters are valid")).collect()
}
