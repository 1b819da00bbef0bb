//! Optimal colouring of Berge graphs through decomposition trees along
//! balanced skew partitions.
//!
//! A node whose piece has a balanced skew partition `(A, B)` splits into
//! `A1 ∪ B` and `A2 ∪ B`; the two child colourings are merged by
//! [`combine_colourings`], which only ever recurses on graphs of smaller
//! clique number.

use thiserror::Error;

use crate::graph::{anticomponents, components, is_anticonnected, Graph, VertexSet};
use crate::oracles::exact_colouring;
use crate::skew::{classify, SkewPartition, SkewSearch};

/// A colouring with colours `1..=palette`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    pub palette: usize,
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn empty() -> Self {
        Colouring { palette: 0, colours: Vec::new() }
    }

    /// Builds a colouring whose palette is the largest colour used.
    pub fn from_colours(colours: Vec<usize>) -> Self {
        let palette = colours.iter().copied().max().unwrap_or(0);
        Colouring { palette, colours }
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// Colours actually used, ascending.
    pub fn used(&self) -> Vec<usize> {
        let mut c = self.colours.clone();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// True iff `c` assigns every vertex a colour in `1..=palette` and no edge
/// is monochromatic.
pub fn verify_colouring(g: &Graph, c: &Colouring) -> bool {
    c.colours.len() == g.n()
        && c.colours.iter().all(|&x| x >= 1 && x <= c.palette)
        && g.edges().all(|(u, v)| c.colours[u] != c.colours[v])
}

/// Colours the leaves that have no balanced skew partition.
pub trait LeafColourer {
    /// An optimal colouring of a Berge graph with no balanced skew partition.
    fn colour(&self, g: &Graph) -> Colouring;
}

/// Exact branch-and-bound colouring; the default leaf colourer.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactLeafColourer;

impl LeafColourer for ExactLeafColourer {
    fn colour(&self, g: &Graph) -> Colouring {
        Colouring::from_colours(exact_colouring(g))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColourError {
    #[error("odd cycle in a triangle-free piece: the graph is not Berge")]
    OddCycle,
    #[error("contract violation in colour merging: {0}")]
    Contract(String),
    #[error("merge check failed: {0}")]
    Check(String),
    #[error("sub-colouring is not proper or uses too many colours")]
    BadSubColouring,
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
pub fn max_clique(g: &Graph) -> (usize, VertexSet) {
    fn expand(g: &Graph, current: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
        // greedy colour classes give an upper bound per vertex
        let mut order = Vec::with_capacity(candidates.len());
        let mut rest = candidates;
        let mut colour = 0;
        while !rest.is_empty() {
            colour += 1;
            let mut avail = rest;
            while let Some(v) = avail.pop_min() {
                order.push((v, colour));
                rest.remove(v);
                avail -= g.neighbours(v);
            }
        }
        let mut candidates = candidates;
        while let Some((v, bound)) = order.pop() {
            if current.len() + bound <= best.len() {
                return;
            }
            let next = current.with(v);
            let inner = candidates & g.neighbours(v);
            if inner.is_empty() {
                if next.len() > best.len() {
                    *best = next;
                }
            } else {
                expand(g, next, inner, best);
            }
            candidates.remove(v);
        }
    }
    let mut best = VertexSet::empty();
    expand(g, VertexSet::empty(), g.vertices(), &mut best);
    (best.len(), best)
}

/// Runtime checks of one merge, recorded rather than asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombineTrace {
    pub k: usize,
    pub b1: usize,
    pub ell: [usize; 2],
    pub h_sizes: [usize; 2],
    pub n: usize,
    pub t_clique: usize,
}

impl CombineTrace {
    /// `ℓᵢ ≤ k−1`, `|V(Hᵢ)| ≤ n` and `ω(G[T1 ∪ T2]) ≤ b1`.
    pub fn holds(&self) -> bool {
        self.ell.iter().all(|&l| l < self.k) && self.h_sizes.iter().all(|&h| h <= self.n) && self.t_clique <= self.b1
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), ColourError> {
    if cond { Ok(()) } else { Err(ColourError::Check(what())) }
}

/// Positions of `x`'s members inside the ascending list `local`.
fn localise(local: &[usize], x: VertexSet) -> VertexSet {
    x.iter().map(|v| local.binary_search(&v).expect("member of the piece")).collect()
}

/// Bijection on `1..=p` sending the sorted `front` to `1..=front.len()` and
/// every other colour, in order, after it.
fn front_permutation(front: &[usize], p: usize) -> Vec<usize> {
    let mut perm = vec![0; p + 1];
    let mut next = 1;
    for &c in front {
        perm[c] = next;
        next += 1;
    }
    for c in 1..=p {
        if !front.contains(&c) {
            perm[c] = next;
            next += 1;
        }
    }
    perm
}

/// Merges optimal colourings of `G1 = G[A1 ∪ B]` and `G2 = G[A2 ∪ B]` into
/// an `ω(G)`-colouring of `G`.
///
/// `phi1` and `phi2` colour the induced subgraphs with vertices in ascending
/// order. `sub` must colour optimally any Berge graph of clique number below
/// `ω(G)`. Every intermediate claim is checked and reported as an error.
pub fn combine_colourings(
    g: &Graph,
    a1: VertexSet,
    a2: VertexSet,
    b: VertexSet,
    phi1: &Colouring,
    phi2: &Colouring,
    sub: &mut dyn FnMut(&Graph) -> Result<Colouring, ColourError>,
) -> Result<(Colouring, CombineTrace), ColourError> {
    let n = g.n();
    let contract = |s: &str| Err(ColourError::Contract(s.to_string()));
    if a1.intersects(&a2) || a1.intersects(&b) || a2.intersects(&b) || a1 | a2 | b != g.vertices() {
        return contract("A1, A2, B must partition the vertices");
    }
    if a1.is_empty() || a2.is_empty() {
        return contract("A1 and A2 must be nonempty");
    }
    if a1.iter().any(|v| g.neighbours(v).intersects(&a2)) {
        return contract("A1 must be anticomplete to A2");
    }
    let anticomps = anticomponents(g, b);
    if anticomps.len() < 2 {
        return contract("G[B] must not be anticonnected");
    }
    let (k, _) = max_clique(g);
    let sides = [a1 | b, a2 | b];
    let mut phis = Vec::with_capacity(2);
    for (side, phi) in sides.iter().zip([phi1, phi2]) {
        let (gi, local) = g.induced(*side);
        if !verify_colouring(&gi, phi) || phi.colours.iter().any(|&c| c > k) {
            return contract("child colourings must be proper with at most ω(G) colours");
        }
        // global-indexed copy, 0 outside the side
        let mut global = vec![0; n];
        for (i, &v) in local.iter().enumerate() {
            global[v] = phi.colours[i];
        }
        phis.push(global);
    }

    // step 1
    let mut bb1 = anticomps[0];
    let mut bb2 = b - bb1;
    let clique_of = |x: VertexSet| max_clique(&g.induced(x).0).0;
    let (mut b1, mut b2) = (clique_of(bb1), clique_of(bb2));
    if bb1.len() - b1 > bb2.len() - b2 {
        std::mem::swap(&mut bb1, &mut bb2);
        std::mem::swap(&mut b1, &mut b2);
    }

    let mut ell = [0; 2];
    let mut h_sizes = [0; 2];
    let mut psis: Vec<Vec<usize>> = Vec::with_capacity(2);
    for i in 0..2 {
        // step 2
        let phi = &mut phis[i];
        let mut li: Vec<usize> = bb1.iter().map(|v| phi[v]).collect();
        li.sort_unstable();
        li.dedup();
        let l = li.len();
        ell[i] = l;
        check(l < k, || format!("ℓ{} = {l} is not below k = {k}", i + 1))?;
        let perm = front_permutation(&li, k);
        for c in phi.iter_mut().filter(|c| **c > 0) {
            *c = perm[*c];
        }
        let s: VertexSet = sides[i].iter().filter(|&v| phi[v] <= l).collect();

        // step 3
        let extra = l - b1;
        let (gs, slocal) = g.induced(s);
        let b1_local = localise(&slocal, bb1);
        let h = gs.with_clique_appended(extra, |_| b1_local).map_err(|e| ColourError::Contract(e.to_string()))?;
        h_sizes[i] = h.n();
        check(h.n() <= n, || format!("|V(H{})| = {} exceeds n = {n}", i + 1, h.n()))?;
        let xi = sub(&h)?;
        if !verify_colouring(&h, &xi) || xi.colours.iter().any(|&c| c > l) {
            return Err(ColourError::BadSubColouring);
        }
        let mut new_colours: Vec<usize> = xi.colours[gs.n()..].to_vec();
        new_colours.sort_unstable();
        // send the clique's colours to b1+1..=l and the remaining colours to 1..=b1
        let mut rest: Vec<usize> = (1..=l).filter(|c| !new_colours.contains(c)).collect();
        rest.extend(new_colours);
        let perm = front_permutation(&rest, l);
        let mut psi = phi.clone();
        for (j, &v) in slocal.iter().enumerate() {
            psi[v] = perm[xi.colours[j]];
        }
        for j in 0..extra {
            let c = perm[xi.colours[gs.n() + j]];
            check(c > b1, || "new clique vertex kept a colour ≤ b1".into())?;
        }
        check(bb1.iter().all(|v| psi[v] <= b1), || format!("B1 uses a colour above b1 in ψ{}", i + 1))?;
        psis.push(psi);
    }

    // step 4
    let t: Vec<VertexSet> = (0..2).map(|i| sides[i].iter().filter(|&v| psis[i][v] <= b1).collect()).collect();
    for (i, ti) in t.iter().enumerate() {
        check(bb1.is_subset(ti) && bb2.is_disjoint(ti), || format!("T{} does not separate B1 from B2", i + 1))?;
    }
    let t12 = t[0] | t[1];
    let rest = g.vertices() - t12;
    let (gt, tlocal) = g.induced(t12);
    let (gr, rlocal) = g.induced(rest);
    let t_clique = max_clique(&gt).0;
    check(t_clique <= b1, || format!("ω(G[T1 ∪ T2]) = {t_clique} exceeds b1 = {b1}"))?;
    let ct = sub(&gt)?;
    let cr = sub(&gr)?;
    if !verify_colouring(&gt, &ct) || ct.palette > b1 || !verify_colouring(&gr, &cr) || cr.palette + b1 > k {
        return Err(ColourError::BadSubColouring);
    }
    let mut colours = vec![0; n];
    for (j, &v) in tlocal.iter().enumerate() {
        colours[v] = ct.colours[j];
    }
    for (j, &v) in rlocal.iter().enumerate() {
        colours[v] = cr.colours[j] + b1;
    }
    let out = Colouring { palette: k, colours };
    check(verify_colouring(g, &out), || "merged colouring is not proper".into())?;
    let trace = CombineTrace { k, b1, ell, h_sizes, n, t_clique };
    Ok((out, trace))
}

/// Why a node of the decomposition tree was not split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafKind {
    /// Fewer than `2k` vertices.
    Small,
    /// Clique number below `k`.
    CliqueDrop,
    NotAnticonnected,
    NoBalancedSkewPartition,
}

impl LeafKind {
    pub fn name(&self) -> &'static str {
        match self {
            LeafKind::Small => "small",
            LeafKind::CliqueDrop => "clique-number-drop",
            LeafKind::NotAnticonnected => "not-anticonnected",
            LeafKind::NoBalancedSkewPartition => "no-balanced-sp",
        }
    }
}

/// Outcome of processing one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeOutcome {
    Leaf(LeafKind),
    /// A balanced skew partition of the piece (global indices) and the two
    /// children `A1 ∪ B`, `A2 ∪ B`.
    Split { partition: SkewPartition, children: (VertexSet, VertexSet) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpNode {
    pub set: VertexSet,
    pub kind: SpNodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpNodeKind {
    Leaf(LeafKind),
    Split { partition: SkewPartition, children: (usize, usize) },
}

/// Decomposition tree along balanced skew partitions; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpTree {
    pub k: usize,
    pub nodes: Vec<SpNode>,
    /// Candidate cutsets examined while searching for partitions.
    pub candidates_examined: usize,
}

impl SpTree {
    pub fn root(&self) -> &SpNode {
        &self.nodes[0]
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n.kind, SpNodeKind::Split { .. })).count()
    }

    pub fn leaves(&self) -> impl Iterator<Item = (VertexSet, LeafKind)> + '_ {
        self.nodes.iter().filter_map(|n| match n.kind {
            SpNodeKind::Leaf(kind) => Some((n.set, kind)),
            SpNodeKind::Split { .. } => None,
        })
    }

    /// Structural checks: children cover their parent and meet in `B`, each
    /// certificate is a skew partition of its piece with the first child on
    /// one side, and every leaf tag is true. Balance is left to the oracle.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if self.nodes.is_empty() || self.root().set != g.vertices() {
            return Err("root is not the whole graph".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let x = node.set;
            let (gx, local) = g.induced(x);
            match node.kind {
                SpNodeKind::Split { partition, children: (l, r) } => {
                    let (x1, x2) = (self.nodes[l].set, self.nodes[r].set);
                    let (a, b) = (partition.a, partition.b);
                    if x1 | x2 != x || x1 & x2 != b || x1 == x || x2 == x {
                        return Err(format!("node {i}: children do not split along B"));
                    }
                    if classify(&gx, localise(&local, a), localise(&local, b)).is_none() {
                        return Err(format!("node {i}: certificate is not a skew partition"));
                    }
                    if x.len() < 2 * self.k {
                        return Err(format!("node {i}: split a small piece"));
                    }
                }
                SpNodeKind::Leaf(kind) => {
                    let ok = match kind {
                        LeafKind::Small => x.len() < 2 * self.k,
                        LeafKind::CliqueDrop => max_clique(&gx).0 < self.k,
                        LeafKind::NotAnticonnected => !is_anticonnected(g, x),
                        LeafKind::NoBalancedSkewPartition => true,
                    };
                    if !ok {
                        return Err(format!("node {i}: leaf tag {} does not hold", kind.name()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn process_with(g: &Graph, x: VertexSet, k: usize, examined: &mut usize) -> NodeOutcome {
    if x.len() < 2 * k {
        return NodeOutcome::Leaf(LeafKind::Small);
    }
    let (gx, local) = g.induced(x);
    if max_clique(&gx).0 < k {
        return NodeOutcome::Leaf(LeafKind::CliqueDrop);
    }
    if !is_anticonnected(&gx, gx.vertices()) {
        return NodeOutcome::Leaf(LeafKind::NotAnticonnected);
    }
    let search = SkewSearch::new(&gx);
    let found = search.find_balanced();
    *examined += search.candidates_examined();
    let Some(sp) = found else {
        return NodeOutcome::Leaf(LeafKind::NoBalancedSkewPartition);
    };
    let lift = |s: VertexSet| -> VertexSet { s.iter().map(|v| local[v]).collect() };
    let (a, b) = (lift(sp.a), lift(sp.b));
    let a1 = components(g, a)[0];
    let partition = SkewPartition { a, b, ..sp };
    NodeOutcome::Split { partition, children: (a1 | b, (a - a1) | b) }
}

/// Processes the piece `X` of `g` against clique number `k`.
pub fn process_node(g: &Graph, x: VertexSet, k: usize) -> NodeOutcome {
    process_with(g, x, k, &mut 0)
}

/// Decomposition tree of a Berge graph, built breadth-first.
pub fn build_sp_tree(g: &Graph) -> SpTree {
    let k = max_clique(g).0;
    let mut tree = SpTree { k, nodes: vec![SpNode { set: g.vertices(), kind: SpNodeKind::Leaf(LeafKind::Small) }], candidates_examined: 0 };
    let mut next = 0;
    while next < tree.nodes.len() {
        let x = tree.nodes[next].set;
        tree.nodes[next].kind = match process_with(g, x, k, &mut tree.candidates_examined) {
            NodeOutcome::Leaf(kind) => SpNodeKind::Leaf(kind),
            NodeOutcome::Split { partition, children: (x1, x2) } => {
                let l = tree.nodes.len();
                for set in [x1, x2] {
                    tree.nodes.push(SpNode { set, kind: SpNodeKind::Leaf(LeafKind::Small) });
                }
                SpNodeKind::Split { partition, children: (l, l + 1) }
            }
        };
        next += 1;
    }
    tree
}

/// Counters gathered during one colouring run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColourStats {
    pub trees: usize,
    pub tree_nodes: usize,
    pub leaves: usize,
    pub candidates_examined: usize,
    pub combines: Vec<CombineTrace>,
}

/// An `ω(g)`-colouring of a Berge graph `g`.
///
/// Non-Berge input may produce an error; it never produces an improper
/// colouring.
pub fn colour_berge(g: &Graph, leaf: &dyn LeafColourer) -> Result<Colouring, ColourError> {
    colour_berge_traced(g, leaf).map(|(c, _)| c)
}

/// [`colour_berge`] together with the checks of every merge.
pub fn colour_berge_traced(g: &Graph, leaf: &dyn LeafColourer) -> Result<(Colouring, ColourStats), ColourError> {
    let mut stats = ColourStats::default();
    let c = Colourer { leaf, stats: &mut stats }.colour(g)?;
    Ok((c, stats))
}

struct Colourer<'a> {
    leaf: &'a dyn LeafColourer,
    stats: &'a mut ColourStats,
}

impl Colourer<'_> {
    fn colour(&mut self, g: &Graph) -> Result<Colouring, ColourError> {
        let n = g.n();
        if n == 0 {
            return Ok(Colouring::empty());
        }
        let comps = components(g, g.vertices());
        if comps.len() > 1 {
            let mut colours = vec![0; n];
            let mut palette = 0;
            for c in comps {
                let (gc, local) = g.induced(c);
                let col = self.colour(&gc)?;
                palette = palette.max(col.palette);
                for (i, &v) in local.iter().enumerate() {
                    colours[v] = col.colours[i];
                }
            }
            return Ok(Colouring { palette, colours });
        }
        let (k, _) = max_clique(g);
        match k {
            1 => Ok(Colouring { palette: 1, colours: vec![1; n] }),
            2 => two_colour(g),
            _ => {
                let tree = build_sp_tree(g);
                self.stats.trees += 1;
                self.stats.tree_nodes += tree.nodes.len();
                self.stats.candidates_examined += tree.candidates_examined;
                self.colour_node(g, &tree, 0)
            }
        }
    }

    fn colour_node(&mut self, g: &Graph, tree: &SpTree, i: usize) -> Result<Colouring, ColourError> {
        let node = &tree.nodes[i];
        let (gx, local) = g.induced(node.set);
        match node.kind {
            SpNodeKind::Leaf(kind) => {
                self.stats.leaves += 1;
                match kind {
                    LeafKind::Small => Ok(Colouring::from_colours(exact_colouring(&gx))),
                    LeafKind::CliqueDrop => self.colour(&gx),
                    LeafKind::NotAnticonnected => self.colour_anticomponents(&gx),
                    LeafKind::NoBalancedSkewPartition => Ok(self.leaf.colour(&gx)),
                }
            }
            SpNodeKind::Split { partition, children: (l, r) } => {
                let phi1 = self.colour_node(g, tree, l)?;
                let phi2 = self.colour_node(g, tree, r)?;
                let a1 = localise(&local, tree.nodes[l].set - partition.b);
                let a2 = localise(&local, tree.nodes[r].set - partition.b);
                let b = localise(&local, partition.b);
                let mut sub = |h: &Graph| self.colour(h);
                let (c, trace) = combine_colourings(&gx, a1, a2, b, &phi1, &phi2, &mut sub)?;
                self.stats.combines.push(trace);
                Ok(c)
            }
        }
    }

    fn colour_anticomponents(&mut self, g: &Graph) -> Result<Colouring, ColourError> {
        let mut colours = vec![0; g.n()];
        let mut offset = 0;
        for part in anticomponents(g, g.vertices()) {
            let (gp, local) = g.induced(part);
            let c = self.colour(&gp)?;
            for (i, &v) in local.iter().enumerate() {
                colours[v] = c.colours[i] + offset;
            }
            offset += c.palette;
        }
        Ok(Colouring { palette: offset, colours })
    }
}

/// Two-colours a connected triangle-free graph by breadth-first search.
fn two_colour(g: &Graph) -> Result<Colouring, ColourError> {
    let n = g.n();
    let mut colours = vec![0; n];
    for s in 0..n {
        if colours[s] != 0 {
            continue;
        }
        colours[s] = 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbours(u).iter() {
                if colours[w] == 0 {
                    colours[w] = 3 - colours[u];
                    queue.push_back(w);
                } else if colours[w] == colours[u] {
                    return Err(ColourError::OddCycle);
                }
            }
        }
    }
    Ok(Colouring::from_colours(colours))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, set, tusp8};

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique(&cycle(5)).0, 2);
        assert_eq!(max_clique(&complete(4)).0, 4);
        assert_eq!(max_clique(&Graph::edgeless(0).unwrap()).0, 0);
        let (w, c) = max_clique(&tusp8());
        assert_eq!(w, 3);
        assert!(crate::graph::is_clique(&tusp8(), c));
    }

    #[test]
    fn verify_examples() {
        let p4 = path(4);
        assert!(verify_colouring(&p4, &Colouring::from_colours(vec![1, 2, 1, 2])));
        assert!(!verify_colouring(&p4, &Colouring::from_colours(vec![1, 1, 2, 1])));
        assert!(verify_colouring(&Graph::edgeless(0).unwrap(), &Colouring::empty()));
    }

    #[test]
    fn combine_p4() {
        // a b c d = 0 1 2 3
        let p4 = path(4);
        // G1 = {a, b, c}: b:1, a:2, c:2 in local order a, b, c
        let phi1 = Colouring { palette: 2, colours: vec![2, 1, 2] };
        // G2 = {b, c, d}: b:1, c:2, d:1
        let phi2 = Colouring { palette: 2, colours: vec![1, 2, 1] };
        let mut sub = |h: &Graph| colour_berge(h, &ExactLeafColourer);
        let (c, trace) =
            combine_colourings(&p4, set(&[0]), set(&[3]), set(&[1, 2]), &phi1, &phi2, &mut sub).unwrap();
        assert_eq!(c.colours, vec![2, 1, 2, 1]);
        assert_eq!(c.palette, 2);
        assert!(trace.holds());
    }

    #[test]
    fn combine_rejects_bad_contracts() {
        let p4 = path(4);
        let phi = Colouring { palette: 2, colours: vec![2, 1, 2] };
        let mut sub = |h: &Graph| colour_berge(h, &ExactLeafColourer);
        let err = combine_colourings(&p4, set(&[0, 3]), set(&[]), set(&[1, 2]), &phi, &phi, &mut sub);
        assert!(matches!(err, Err(ColourError::Contract(_))));
        let bad = Colouring { palette: 2, colours: vec![1, 1, 2] };
        let err = combine_colourings(&p4, set(&[0]), set(&[3]), set(&[1, 2]), &bad, &phi, &mut sub);
        assert!(matches!(err, Err(ColourError::Contract(_))));
    }

    #[test]
    fn process_node_examples() {
        let p4 = path(4);
        match process_node(&p4, p4.vertices(), 2) {
            NodeOutcome::Split { children, .. } => assert_eq!(children, (set(&[0, 1, 2]), set(&[1, 2, 3]))),
            other => panic!("{other:?}"),
        }
        let k5 = complete(5);
        assert_eq!(process_node(&k5, k5.vertices(), 3), NodeOutcome::Leaf(LeafKind::Small));
        assert_eq!(process_node(&k5, k5.vertices(), 2), NodeOutcome::Leaf(LeafKind::NotAnticonnected));
    }

    #[test]
    fn sp_tree_examples() {
        let p4 = path(4);
        let t = build_sp_tree(&p4);
        assert_eq!(t.internal_count(), 1);
        assert_eq!(t.leaves().count(), 2);
        t.check(&p4).unwrap();
        let c6 = cycle(6);
        let t = build_sp_tree(&c6);
        assert_eq!(t.nodes.len(), 1);
    }

    #[test]
    fn colour_examples() {
        let c = colour_berge(&cycle(6).complement(), &ExactLeafColourer).unwrap();
        assert_eq!(c.palette, 3);
        assert!(verify_colouring(&cycle(6).complement(), &c));
        let c = colour_berge(&path(5), &ExactLeafColourer).unwrap();
        assert_eq!(c.palette, 2);
        let c = colour_berge(&Graph::edgeless(3).unwrap(), &ExactLeafColourer).unwrap();
        assert_eq!(c.palette, 1);
        assert_eq!(colour_berge(&cycle(5), &ExactLeafColourer), Err(ColourError::OddCycle));
        let g = tusp8();
        let c = colour_berge(&g, &ExactLeafColourer).unwrap();
        assert_eq!(c.palette, 3);
        assert!(verify_colouring(&g, &c));
    }
}
