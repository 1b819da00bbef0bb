//! Dense undirected simple graphs with bit-row adjacency, plus the structural
//! queries (components, anticomponents, induced paths, square holes) that the
//! decomposition algorithms are built from.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use thiserror::Error;

const WORDS: usize = 2;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64 * WORDS;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A set of vertex indices, stored as a fixed-width bitmask.
///
/// Ordering is lexicographic on the ascending element sequence, so sorting a
/// list of sets gives the canonical order used for every output list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut s = Self::empty();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest element.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    pub fn pop_min(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }

    pub fn iter(&self) -> VertexIter {
        VertexIter { words: self.words, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! set_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident, $op:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $method(self, rhs: VertexSet) -> VertexSet {
                let mut out = self;
                for i in 0..WORDS {
                    out.words[i] = $op(self.words[i], rhs.words[i]);
                }
                out
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $amethod(&mut self, rhs: VertexSet) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

set_binop!(BitAnd, bitand, BitAndAssign, bitand_assign, |a: u64, b: u64| a & b);
set_binop!(BitOr, bitor, BitOrAssign, bitor_assign, |a: u64, b: u64| a | b);
set_binop!(Sub, sub, SubAssign, sub_assign, |a: u64, b: u64| a & !b);

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Immutable once built; every algorithm in the crate takes `&Graph`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is allowed; the front end
    /// rejects empty inputs separately.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::empty(); n] })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph whose edge set is `{uv : u < v, edge(u, v)}`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Non-neighbours of `v` other than `v` itself.
    #[inline]
    pub fn antineighbours(&self, v: usize) -> VertexSet {
        self.vertices() - self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all - self.adj[v].with(v)).collect();
        Graph { n: self.n, adj }
    }

    /// `G[x]`, relabelled so that the i-th smallest member of `x` becomes
    /// vertex `i`. Returns the graph and the local-to-global vertex map.
    pub fn induced(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        let map = x.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & x).iter().map(|u| pos[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// Graph with the vertices of `self` plus `extra` new vertices appended.
    /// `attach(i)` gives the old-vertex neighbourhood of new vertex `n + i`;
    /// the new vertices form a clique.
    pub fn with_clique_appended(
        &self,
        extra: usize,
        attach: impl Fn(usize) -> VertexSet,
    ) -> Result<Graph, GraphError> {
        let total = self.n + extra;
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut adj = self.adj.clone();
        adj.resize(total, VertexSet::empty());
        for i in 0..extra {
            let v = self.n + i;
            for u in attach(i).iter() {
                adj[v].insert(u);
                adj[u].insert(v);
            }
            for j in 0..extra {
                if j != i {
                    adj[v].insert(self.n + j);
                }
            }
        }
        Ok(Graph { n: total, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Union of the vertices reachable from `start` inside `x` (including
/// `start`), following `g` edges if `anti` is false and non-edges otherwise.
fn reach(g: &Graph, x: VertexSet, start: usize, anti: bool) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while let Some(v) = frontier.pop_min() {
        let step = if anti { x - g.adj[v].with(v) } else { x & g.adj[v] };
        let new = step - seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

fn pieces(g: &Graph, x: VertexSet, anti: bool) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = x;
    while let Some(v) = rest.first() {
        let c = reach(g, rest, v, anti);
        rest -= c;
        out.push(c);
    }
    out
}

/// Components of `g[x]`, ordered by minimum vertex.
pub fn components(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    pieces(g, x, false)
}

/// Anticomponents of `g[x]` (components of the complement restricted to
/// `x`), ordered by minimum vertex.
pub fn anticomponents(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    pieces(g, x, true)
}

/// The component of `g[x]` containing `v`.
pub fn component_of(g: &Graph, x: VertexSet, v: usize) -> VertexSet {
    debug_assert!(x.contains(v));
    reach(g, x, v, false)
}

/// The anticomponent of `g[x]` containing `v`.
pub fn anticomponent_of(g: &Graph, x: VertexSet, v: usize) -> VertexSet {
    debug_assert!(x.contains(v));
    reach(g, x, v, true)
}

/// Whether `g[x]` is connected. The empty set counts as connected.
pub fn is_connected(g: &Graph, x: VertexSet) -> bool {
    match x.first() {
        None => true,
        Some(v) => reach(g, x, v, false) == x,
    }
}

/// Whether `g[x]` is anticonnected. The empty set counts as anticonnected.
pub fn is_anticonnected(g: &Graph, x: VertexSet) -> bool {
    match x.first() {
        None => true,
        Some(v) => reach(g, x, v, true) == x,
    }
}

pub fn is_clique(g: &Graph, x: VertexSet) -> bool {
    x.iter().all(|v| (x - g.adj[v]).without(v).is_empty())
}

pub fn is_stable(g: &Graph, x: VertexSet) -> bool {
    x.iter().all(|v| g.adj[v].is_disjoint(&x))
}

/// `v` is adjacent to every member of `x`. Vacuously true for empty `x`.
///
/// # Panics
/// If `v ∈ x`.
pub fn is_complete_to(g: &Graph, v: usize, x: VertexSet) -> bool {
    assert!(!x.contains(v), "vertex {v} is a member of the tested set");
    x.is_subset(&g.adj[v])
}

/// `v` is nonadjacent to every member of `x`. Vacuously true for empty `x`.
///
/// # Panics
/// If `v ∈ x`.
pub fn is_anticomplete_to(g: &Graph, v: usize, x: VertexSet) -> bool {
    assert!(!x.contains(v), "vertex {v} is a member of the tested set");
    x.is_disjoint(&g.adj[v])
}

/// Every member of `x` is adjacent to every member of `y` (`x`, `y` disjoint).
pub fn sets_complete(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    x.iter().all(|v| y.is_subset(&g.adj[v]))
}

/// No edge between `x` and `y`.
pub fn sets_anticomplete(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    x.iter().all(|v| y.is_disjoint(&g.adj[v]))
}

/// An induced path in `g` (`anti == false`) or in its complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub anti: bool,
}

impl Path {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn interior(&self) -> VertexSet {
        let k = self.vertices.len();
        if k < 3 {
            return VertexSet::empty();
        }
        self.vertices[1..k - 1].iter().copied().collect()
    }

    /// Checks the induced-path invariant directly on the adjacency.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: VertexSet = vs.iter().copied().collect();
        if distinct.len() != vs.len() {
            return false;
        }
        let linked = |u: usize, v: usize| g.adjacent(u, v) != self.anti;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if linked(vs[i], vs[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }
}

/// A shortest `u`–`v` path in `g[interior ∪ {u, v}]`, which is necessarily
/// induced. `None` if `u` and `v` are disconnected there.
///
/// # Panics
/// If `u == v` or either end lies in `interior`.
pub fn shortest_induced_path(g: &Graph, u: usize, v: usize, interior: VertexSet) -> Option<Path> {
    assert!(u != v, "path ends must differ");
    assert!(
        !interior.contains(u) && !interior.contains(v),
        "path ends must lie outside the interior"
    );
    let allowed = interior.with(v);
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(u);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        // the end vertex v is only entered, never expanded
        if x != u && !interior.contains(x) {
            continue;
        }
        for y in (g.neighbours(x) & (allowed - seen)).iter() {
            seen.insert(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if !seen.contains(v) {
        return None;
    }
    let mut vertices = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        vertices.push(x);
    }
    vertices.reverse();
    Some(Path { vertices, anti: false })
}

/// A square hole `a-b-c-d-a`, stored with `a` the minimum vertex and `b < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Square {
    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// All induced 4-cycles of `g`, each once, in lexicographic order.
pub fn enumerate_c4_holes(g: &Graph) -> Vec<Square> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let na = g.neighbours(a);
        for c in a + 1..g.n() {
            if g.adjacent(a, c) {
                continue;
            }
            // b, d: common neighbours of a and c, above a, pairwise nonadjacent
            let common = (na & g.neighbours(c)).iter().filter(|&x| x > a).collect::<Vec<_>>();
            for (i, &b) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if !g.adjacent(b, d) {
                        out.push(Square { a, b, c, d });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn vertex_set_basics() {
        let s = set(&[3, 70, 1]);
        assert_eq!(s.to_vec(), vec![1, 3, 70]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(set(&[1, 70]).is_subset(&s));
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(set(&[0, 5]) < set(&[0, 6]));
        assert!(set(&[0, 5]) < set(&[1]));
        assert!(set(&[0]) < set(&[0, 1]));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::edgeless(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle(5);
        let cc5 = c5.complement();
        assert_eq!(cc5.m(), 5);
        assert!((0..5).all(|v| cc5.degree(v) == 2));
        assert!(is_connected(&cc5, cc5.vertices()));
        assert_eq!(Graph::edgeless(3).unwrap().complement().m(), 3);
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn components_examples() {
        let p4 = path(4);
        assert_eq!(components(&p4, set(&[0, 3])), vec![set(&[0]), set(&[3])]);
        assert!(components(&p4, VertexSet::empty()).is_empty());
        let c6 = cycle(6);
        assert_eq!(components(&c6, c6.vertices()), vec![c6.vertices()]);
    }

    #[test]
    fn anticomponents_examples() {
        let p4 = path(4);
        assert_eq!(anticomponents(&p4, set(&[1, 2])), vec![set(&[1]), set(&[2])]);
        assert_eq!(anticomponents(&p4, set(&[2])), vec![set(&[2])]);
        // K_{2,3}: parts {0,1,2} and {3,4}; x1=0, x2=1 nonadjacent, z=3
        let k23 = Graph::from_fn(5, |u, v| (u < 3) != (v < 3)).unwrap();
        assert_eq!(anticomponents(&k23, set(&[0, 1, 3])), vec![set(&[0, 1]), set(&[3])]);
    }

    #[test]
    fn complete_and_anticomplete() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_complete_to(&star, 0, set(&[1, 2, 3])));
        assert!(is_complete_to(&star, 0, VertexSet::empty()));
        assert!(is_anticomplete_to(&star, 0, VertexSet::empty()));
        let p4 = path(4);
        assert!(!is_complete_to(&p4, 0, set(&[1, 2])));
        assert!(!is_anticomplete_to(&p4, 0, set(&[1, 2])));
    }

    #[test]
    #[should_panic]
    fn complete_to_rejects_member() {
        is_complete_to(&path(3), 1, set(&[1, 2]));
    }

    #[test]
    fn shortest_path_examples() {
        let c6 = cycle(6);
        let p = shortest_induced_path(&c6, 0, 3, set(&[1, 2, 4, 5])).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.is_valid_in(&c6));
        let p4 = path(4);
        assert_eq!(shortest_induced_path(&p4, 0, 3, set(&[1])), None);
        let p = shortest_induced_path(&p4, 0, 3, set(&[1, 2])).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2, 3]);
        let p = shortest_induced_path(&p4, 1, 2, VertexSet::empty()).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn square_hole_examples() {
        assert_eq!(enumerate_c4_holes(&cycle(4)), vec![Square { a: 0, b: 1, c: 2, d: 3 }]);
        let k4 = Graph::from_fn(4, |_, _| true).unwrap();
        assert!(enumerate_c4_holes(&k4).is_empty());
        assert!(enumerate_c4_holes(&cycle(6)).is_empty());
    }

    #[test]
    fn induced_relabels_in_order() {
        let p4 = path(4);
        let (h, map) = p4.induced(set(&[1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h, path(3));
    }

    #[test]
    fn appended_clique() {
        let p3 = path(3);
        let h = p3.with_clique_appended(2, |_| set(&[0])).unwrap();
        assert_eq!(h.n(), 5);
        assert!(h.adjacent(3, 4) && h.adjacent(3, 0) && h.adjacent(4, 0));
        assert!(!h.adjacent(3, 1));
    }
}
