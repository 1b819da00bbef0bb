//! Seeded instances shared by the benchmarks.

use skewpart_core::generate::{gnp, random_berge, rng};
use skewpart_core::Graph;

/// `G(n, 1/2)` from a fixed seed.
pub fn dense_random(n: usize, seed: u64) -> Graph {
    gnp(&mut rng(seed), n, 0.5)
}

/// A random Berge graph on `n` vertices with clique number at most `k`.
pub fn berge_instance(n: usize, k: usize, seed: u64) -> Graph {
    random_berge(&mut rng(seed), n, k)
}
