//! Candidate cutset list built from the auxiliary graphs `H(k1, k2, r)`.
//!
//! `H(k1, k2, r)` joins `u` and `v` when they are adjacent in `G`, when some
//! anticomponent of `G[N(u) ∩ N(v)]` has at least `k1` vertices, or when the
//! anticomponent containing `r` has at least `k2` vertices. For a skew
//! partition `(A, B)` whose `B` is not a T-cutset, `B` is a clique cutset of
//! the right `H`, so collecting the clique-cutset kernels of every `H` gives
//! a list in which such a `B` always contains a member.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::cutsets::{clique_cutset_kernels, is_cutset};
use crate::graph::{anticomponents, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KrError {
    #[error("thresholds must satisfy 1 <= k2 <= k1 <= n (got k1={k1}, k2={k2}, n={n})")]
    Thresholds { k1: usize, k2: usize, n: usize },
    #[error("vertex {r} out of range for a graph on {n} vertices")]
    Vertex { r: usize, n: usize },
}

/// Anticomponents of `G[N(u) ∩ N(v)]` for one vertex pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairAnticomps {
    pub parts: Vec<VertexSet>,
    /// Size of the largest part, 0 when the common neighbourhood is empty.
    pub largest: usize,
}

impl PairAnticomps {
    /// Size of the part containing `w`, or 0 if `w` is not a common neighbour.
    pub fn size_containing(&self, w: usize) -> usize {
        self.parts.iter().find(|p| p.contains(w)).map_or(0, VertexSet::len)
    }
}

/// Per-pair anticomponent data for every unordered vertex pair.
#[derive(Debug, Clone)]
pub struct PairAnticompTable {
    n: usize,
    entries: Vec<PairAnticomps>,
}

impl PairAnticompTable {
    pub fn get(&self, u: usize, v: usize) -> &PairAnticomps {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        &self.entries[a * self.n + b]
    }

    pub fn largest(&self, u: usize, v: usize) -> usize {
        self.get(u, v).largest
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }
}

pub fn pair_anticomp_table(g: &Graph) -> PairAnticompTable {
    let n = g.n();
    let mut entries = vec![PairAnticomps::default(); n * n];
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbours(u) & g.neighbours(v);
            let parts = anticomponents(g, common);
            let largest = parts.iter().map(VertexSet::len).max().unwrap_or(0);
            entries[u * n + v] = PairAnticomps { parts, largest };
        }
    }
    PairAnticompTable { n, entries }
}

/// `H(k1, k2, r)`, validating `1 <= k2 <= k1 <= n` and `r ∈ V`.
pub fn aux_graph(g: &Graph, table: &PairAnticompTable, k1: usize, k2: usize, r: usize) -> Result<Graph, KrError> {
    let n = g.n();
    if !(1 <= k2 && k2 <= k1 && k1 <= n) {
        return Err(KrError::Thresholds { k1, k2, n });
    }
    if r >= n {
        return Err(KrError::Vertex { r, n });
    }
    Ok(build_aux(g, table, k1, k2, r))
}

fn build_aux(g: &Graph, table: &PairAnticompTable, k1: usize, k2: usize, r: usize) -> Graph {
    Graph::from_fn(g.n(), |u, v| {
        if g.adjacent(u, v) {
            return true;
        }
        let entry = table.get(u, v);
        entry.largest >= k1 || entry.size_containing(r) >= k2
    })
    .expect("same vertex count as g")
}

/// The candidate cutset list, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateCutsetList {
    pub sets: Vec<VertexSet>,
    /// Distinct auxiliary graphs whose decomposition trees were built.
    pub aux_graphs: usize,
}

const VACUOUS: usize = usize::MAX;

/// Smallest realised value `>= k`; `values` is sorted and ends with a
/// sentinel above every realised value.
fn canonical(values: &[usize], k: usize) -> usize {
    values.iter().copied().find(|&x| x >= k).unwrap_or(*values.last().unwrap())
}

/// Threshold triples `(k1, k2, r)` with `1 <= k2 <= k1 <= n`, collapsed onto
/// realised anticomponent sizes. Thresholds strictly between two realised
/// sizes give the same auxiliary graph as the next realised size.
fn threshold_triples(table: &PairAnticompTable, n: usize) -> BTreeSet<(usize, usize, usize)> {
    let mut k1_values: Vec<usize> =
        table.pairs().map(|(u, v)| table.largest(u, v)).filter(|&m| m > 0).collect();
    let top = k1_values.iter().copied().max().unwrap_or(0);
    k1_values.push(top + 1);
    k1_values.sort_unstable();
    k1_values.dedup();

    let mut triples = BTreeSet::new();
    for r in 0..n {
        let mut k2_values: Vec<usize> = table
            .pairs()
            .map(|(u, v)| table.get(u, v).size_containing(r))
            .filter(|&s| s > 0)
            .collect();
        let top = k2_values.iter().copied().max().unwrap_or(0);
        k2_values.push(top + 1);
        k2_values.sort_unstable();
        k2_values.dedup();
        let r_vacuous = *k2_values.last().unwrap();
        for k1 in 1..=n {
            let c1 = canonical(&k1_values, k1);
            for k2 in 1..=k1 {
                let c2 = canonical(&k2_values, k2);
                if c2 == r_vacuous {
                    // the r-clause adds no edge, so r no longer matters
                    triples.insert((c1, VACUOUS, VACUOUS));
                } else {
                    triples.insert((c1, c2, r));
                }
            }
        }
    }
    triples
}

/// Union of the clique-cutset kernels of every auxiliary graph
/// `H(k1, k2, r)`. Every member is a cutset of `g`; the list has at most
/// `n^4` members.
pub fn kennedy_reed_list(g: &Graph) -> CandidateCutsetList {
    let n = g.n();
    let table = pair_anticomp_table(g);
    let triples: Vec<_> = threshold_triples(&table, n).into_iter().collect();
    let graphs: HashSet<Graph> = triples
        .par_iter()
        .map(|&(k1, k2, r)| {
            let r = if r == VACUOUS { 0 } else { r };
            build_aux(g, &table, k1, k2, r)
        })
        .collect();
    let aux_graphs = graphs.len();
    let mut sets: Vec<VertexSet> = graphs
        .par_iter()
        .flat_map_iter(|h| clique_cutset_kernels(h).into_iter())
        .collect();
    sets.sort();
    sets.dedup();
    debug_assert!(sets.iter().all(|&x| is_cutset(g, x)));
    CandidateCutsetList { sets, aux_graphs }
}
