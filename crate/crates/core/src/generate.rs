//! Fixture graphs and seeded random families.
//!
//! Every random generator takes an explicit RNG so that fixtures are
//! reproducible from a seed; [`rng`] builds the ChaCha-based RNG used
//! throughout the test suites and by the `gen` subcommand.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};
use crate::oracles;

pub type FixtureRng = ChaCha8Rng;

pub fn rng(seed: u64) -> FixtureRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path fits")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle fits")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).expect("complete graph fits")
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_fn(p + q, |u, v| (u < p) != (v < p)).expect("K_{p,q} fits")
}

/// Vertex names of [`tusp8`], in index order.
pub const TUSP8_NAMES: [&str; 8] = ["a1", "a1'", "a2", "a2'", "x1", "x2", "y1", "y2"];

/// Eight-vertex Berge graph with a tight unbalanced skew partition
/// `A = {a1, a1', a2, a2'}`, `B = {x1, x2, y1, y2}`.
pub fn tusp8() -> Graph {
    let (a1, a1p, a2, a2p, x1, x2, y1, y2) = (0, 1, 2, 3, 4, 5, 6, 7);
    Graph::from_edges(
        8,
        [
            (a1, a1p),
            (a2, a2p),
            (x1, y1),
            (x1, y2),
            (x2, y1),
            (x2, y2),
            (x1, a1),
            (x1, a2),
            (x2, a1p),
            (x2, a2p),
            (y1, a1),
            (y1, a2p),
            (y2, a1p),
            (y2, a2),
        ],
    )
    .expect("fixture is simple")
}

/// `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p)).expect("n within bounds")
}

/// Random bipartite graph with parts `0..left` and `left..left+right`.
pub fn random_bipartite<R: Rng>(rng: &mut R, left: usize, right: usize, p: f64) -> Graph {
    Graph::from_fn(left + right, |u, v| (u < left) != (v < left) && rng.gen_bool(p))
        .expect("n within bounds")
}

/// Line graph of `g`; vertex `i` is the i-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    })
    .expect("line graph fits")
}

/// Line graph of a random bipartite graph with exactly `edges` edges and
/// maximum degree at most `max_degree` (so clique number at most
/// `max_degree`).
pub fn random_bipartite_line_graph<R: Rng>(
    rng: &mut R,
    left: usize,
    right: usize,
    edges: usize,
    max_degree: usize,
) -> Graph {
    let mut pairs: Vec<(usize, usize)> =
        (0..left).flat_map(|u| (0..right).map(move |v| (u, left + v))).collect();
    pairs.shuffle(rng);
    let mut degree = vec![0usize; left + right];
    let mut chosen = Vec::new();
    for (u, v) in pairs {
        if chosen.len() == edges {
            break;
        }
        if degree[u] < max_degree && degree[v] < max_degree {
            degree[u] += 1;
            degree[v] += 1;
            chosen.push((u, v));
        }
    }
    let base = Graph::from_edges(left + right, chosen).expect("bipartite base is simple");
    line_graph(&base)
}

/// Disjoint union; vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(n + h.n(), |u, v| {
        if v < n {
            g.adjacent(u, v)
        } else if u >= n {
            h.adjacent(u - n, v - n)
        } else {
            false
        }
    })
    .expect("union fits")
}

/// Join: disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(n + h.n(), |u, v| {
        if v < n {
            g.adjacent(u, v)
        } else if u >= n {
            h.adjacent(u - n, v - n)
        } else {
            true
        }
    })
    .expect("join fits")
}

/// Substitutes `h` for vertex `v` of `g`. The copy of `h` replaces `v`; the
/// remaining vertices of `g` keep their relative order and come first.
pub fn substitute(g: &Graph, v: usize, h: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    let k = keep.len();
    Graph::from_fn(k + h.n(), |a, b| match (a < k, b < k) {
        (true, true) => g.adjacent(keep[a], keep[b]),
        (true, false) => g.adjacent(keep[a], v),
        (false, true) => g.adjacent(keep[b], v),
        (false, false) => h.adjacent(a - k, b - k),
    })
    .expect("substitution fits")
}

/// Random Berge graph on about `n` vertices, built from Berge-preserving
/// operations (complement, join, disjoint union, substitution) over
/// bipartite and line-of-bipartite pieces, with clique number capped at
/// `max_clique` where the pieces allow.
pub fn random_berge<R: Rng>(rng: &mut R, n: usize, max_clique: usize) -> Graph {
    let g = berge_piece(rng, n.max(1), max_clique.max(1));
    debug_assert_eq!(g.n(), n.max(1));
    g
}

fn berge_piece<R: Rng>(rng: &mut R, n: usize, max_clique: usize) -> Graph {
    if n <= 2 {
        return if n == 2 && max_clique >= 2 && rng.gen_bool(0.5) {
            complete(2)
        } else {
            Graph::edgeless(n).expect("tiny")
        };
    }
    let choice = rng.gen_range(0..10);
    match choice {
        0 | 1 => {
            let left = rng.gen_range(1..n);
            let p = rng.gen_range(0.2..0.8);
            let g = random_bipartite(rng, left, n - left, p);
            if max_clique >= 2 { g } else { Graph::edgeless(n).expect("tiny") }
        }
        2 if max_clique >= 3 => {
            // complement of a bipartite graph whose sides are small enough
            let left = (n / 2).min(max_clique);
            let right = n - left;
            if right > max_clique {
                return berge_piece(rng, n, max_clique);
            }
            let p = rng.gen_range(0.3..0.9);
            random_bipartite(rng, left, right, p).complement()
        }
        3 if max_clique >= 2 => {
            let mut tries = 0;
            loop {
                let left = rng.gen_range(2..=n.max(3));
                let right = rng.gen_range(2..=n.max(3));
                let deg = rng.gen_range(2..=max_clique.min(4));
                let g = random_bipartite_line_graph(rng, left, right, n, deg);
                if g.n() == n {
                    return g;
                }
                tries += 1;
                if tries > 8 {
                    return berge_piece(rng, n, max_clique);
                }
            }
        }
        4 | 5 if max_clique >= 2 => {
            let k = rng.gen_range(1..n);
            let cap = rng.gen_range(1..max_clique);
            let a = berge_piece(rng, k, cap);
            let b = berge_piece(rng, n - k, max_clique - cap);
            join(&a, &b)
        }
        6 | 7 => {
            let k = rng.gen_range(1..n);
            let a = berge_piece(rng, k, max_clique);
            let b = berge_piece(rng, n - k, max_clique);
            let u = disjoint_union(&a, &b);
            // connect through a shared vertex pair to keep things interesting
            if rng.gen_bool(0.6) {
                glue_vertices(&u, rng.gen_range(0..k), k + rng.gen_range(0..n - k))
            } else {
                u
            }
        }
        8 if n >= 4 => {
            let k = rng.gen_range(2..n - 1);
            let outer = berge_piece(rng, n - k + 1, max_clique);
            let cap = oracles::clique_number_small(&outer).max(1);
            let inner = berge_piece(rng, k, (max_clique + 1).saturating_sub(cap).max(1));
            let v = rng.gen_range(0..outer.n());
            substitute(&outer, v, &inner)
        }
        _ => {
            let p = rng.gen_range(0.2..0.6);
            let left = rng.gen_range(1..n);
            random_bipartite(rng, left, n - left, p)
        }
    }
}

/// Adds the edge `uv` if that keeps the graph Berge-preserving in the
/// trivial sense: `u` and `v` lie in different components (a bridge never
/// creates a hole).
fn glue_vertices(g: &Graph, u: usize, v: usize) -> Graph {
    Graph::from_fn(g.n(), |a, b| g.adjacent(a, b) || (a, b) == (u.min(v), u.max(v)))
        .expect("same size")
}

/// Random graph on `n` vertices that the brute-force oracle confirms is
/// Berge. Draws from [`random_berge`] and filtered `G(n, p)` alternately.
pub fn random_verified_berge<R: Rng>(rng: &mut R, n: usize, max_clique: usize) -> Graph {
    let budget = oracles::OracleBudget { max_vertices: n.max(12), ..Default::default() };
    loop {
        let g = if rng.gen_bool(0.5) {
            random_berge(rng, n, max_clique)
        } else {
            let p = rng.gen_range(0.15..0.85);
            gnp(rng, n, p)
        };
        if oracles::clique_number_small(&g) <= max_clique
            && oracles::is_berge_bruteforce(&g, &budget).unwrap_or(false)
        {
            return g;
        }
    }
}

/// Set helper used by tests and docs: `set(&[0, 2])`.
pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tusp8_shape() {
        let g = tusp8();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 14);
    }

    #[test]
    fn line_graph_of_star_is_complete() {
        let star = complete_bipartite(1, 4);
        assert_eq!(line_graph(&star), complete(4));
    }

    #[test]
    fn random_berge_families_are_berge() {
        let budget = oracles::OracleBudget::default();
        let mut r = rng(7);
        for i in 0..200 {
            let n = 3 + i % 8;
            let g = random_berge(&mut r, n, 4);
            assert_eq!(g.n(), n);
            assert!(oracles::is_berge_bruteforce(&g, &budget).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn substitution_sizes() {
        let g = substitute(&path(3), 1, &complete(3));
        assert_eq!(g.n(), 5);
        // 0 and 2 of the path are now vertices 0 and 1, both joined to the K3
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.m(), 3 + 6);
    }
}
