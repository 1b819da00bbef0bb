#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use skewpart_core::generate::{self, FixtureRng};
use skewpart_core::oracles::{self, OracleBudget};
use skewpart_core::{Graph, SkewPartition, VertexSet};

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// `count` graphs with `n` drawn from `sizes` and a random edge density.
pub fn random_graphs(rng: &mut FixtureRng, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.1..0.9);
            generate::gnp(rng, n, p)
        })
        .collect()
}

/// Oracle-verified Berge graphs.
pub fn berge_graphs(
    rng: &mut FixtureRng,
    count: usize,
    sizes: std::ops::RangeInclusive<usize>,
    max_clique: usize,
) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            generate::random_verified_berge(rng, n, max_clique)
        })
        .collect()
}

pub fn budget(n: usize) -> OracleBudget {
    OracleBudget::with_partition_limit(n.max(7))
}

pub type Sides = (VertexSet, VertexSet);

pub fn sides(list: &[SkewPartition]) -> BTreeSet<Sides> {
    list.iter().map(|p| (p.a, p.b)).collect()
}

pub fn brute_skew(g: &Graph) -> Vec<SkewPartition> {
    oracles::enumerate_skew_partitions_bruteforce(g, &budget(g.n())).unwrap()
}

pub fn brute_tight(g: &Graph) -> BTreeSet<Sides> {
    sides(&brute_skew(g).into_iter().filter(|p| p.is_tight()).collect::<Vec<_>>())
}

pub fn brute_unbalanced_tight(g: &Graph) -> BTreeSet<Sides> {
    let b = budget(g.n());
    brute_skew(g)
        .into_iter()
        .filter(|p| p.is_tight() && !oracles::is_balanced_bruteforce(g, p.a, p.b, &b).unwrap())
        .map(|p| (p.a, p.b))
        .collect()
}

pub fn brute_has_balanced(g: &Graph) -> bool {
    let b = budget(g.n());
    brute_skew(g).iter().any(|p| oracles::is_balanced_bruteforce(g, p.a, p.b, &b).unwrap())
}

pub fn is_balanced(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    oracles::is_balanced_bruteforce(g, a, b, &budget(g.n())).unwrap()
}

/// Edge list as a compact string, for failure messages and transcripts.
pub fn show(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

/// A random graph with a planted skew partition, returned with its `B`:
/// `A` is two components of at least two vertices, `B` the join of two parts
/// of at least two vertices (often stable), and the edges between `A` and
/// `B` are random.
pub fn planted_skew(rng: &mut FixtureRng, n: usize) -> (Graph, VertexSet) {
    // tightness needs every side piece to have two vertices
    let a = rng.gen_range(4..=n - 4);
    let a1 = rng.gen_range(2..=a - 2);
    let b1 = rng.gen_range(a + 2..=n - 2);
    let stable_b = rng.gen_bool(0.7);
    let (p_in, p_ab) = (rng.gen_range(0.0..1.0), rng.gen_range(0.2..0.9));
    let part = |x: usize| if x < a1 { 0 } else if x < a { 1 } else if x < b1 { 2 } else { 3 };
    let g = Graph::from_fn(n, |u, v| match (part(u), part(v)) {
        // path spine keeps each A part connected
        (p, q) if p == q && p < 2 && v == u + 1 => true,
        (p, q) if p == q && p >= 2 && stable_b => false,
        (p, q) if p == q => rng.gen_bool(p_in),
        (0, 1) | (1, 0) => false,
        (2, 3) | (3, 2) => true,
        _ => rng.gen_bool(p_ab),
    })
    .unwrap();
    (g, (a..n).collect())
}

/// Planted skew graphs whose planted partition is tight by definition.
pub fn planted_tight_graphs(rng: &mut FixtureRng, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(sizes.clone());
        let (g, b) = planted_skew(rng, n);
        let a = g.vertices() - b;
        if oracles::is_skew_by_definition(&g, a, b) && oracles::loose_witness_by_definition(&g, a, b).is_none() {
            out.push(g);
        }
    }
    out
}
