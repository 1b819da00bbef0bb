//! Star cutsets, T-cutsets and clique-cutset decomposition trees.

use crate::graph::{
    anticomponents, component_of, components, is_clique, is_complete_to, is_connected,
    sets_anticomplete, Graph, VertexSet,
};

/// `g ∖ x` has at least two components. Removing every vertex leaves the
/// null graph, which counts as connected.
pub fn is_cutset(g: &Graph, x: VertexSet) -> bool {
    let rest = g.vertices() - x;
    !rest.is_empty() && !is_connected(g, rest)
}

/// Vertex scan for a star cutset. Vertices are examined in ascending order;
/// the first rule that fires determines the output.
pub fn find_star_cutset(g: &Graph) -> Option<VertexSet> {
    let all = g.vertices();
    for v in 0..g.n() {
        let nv = g.neighbours(v);
        let closed = nv.with(v);
        let rest = all - closed;
        if nv.is_empty() {
            continue;
        }
        let parts = components(g, rest);
        if parts.len() >= 2 {
            return Some(closed);
        }
        if nv.len() >= 2 && parts.len() == 1 {
            let c = parts[0];
            if let Some(u) = nv.iter().find(|&u| g.neighbours(u).is_disjoint(&c)) {
                return Some(closed.without(u));
            }
        }
        if nv.len() >= 3 && rest.is_empty() {
            for x in nv.iter() {
                if let Some(y) = (nv - g.neighbours(x)).iter().find(|&y| y > x) {
                    return Some(all.without(x).without(y));
                }
            }
        }
    }
    None
}

/// Scan for a T-cutset over nonadjacent pairs in lexicographic order.
pub fn find_t_cutset(g: &Graph) -> Option<VertexSet> {
    let all = g.vertices();
    for a1 in 0..g.n() {
        for a2 in a1 + 1..g.n() {
            if g.adjacent(a1, a2) {
                continue;
            }
            let common = g.neighbours(a1) & g.neighbours(a2);
            for b1 in anticomponents(g, common) {
                let outside = all - b1 - VertexSet::singleton(a1).with(a2);
                let b2: VertexSet = outside.iter().filter(|&w| is_complete_to(g, w, b1)).collect();
                if b2.is_empty() {
                    continue;
                }
                let rest = all - b1 - b2;
                if !component_of(g, rest, a1).contains(a2) {
                    return Some(b1 | b2);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcNode {
    pub set: VertexSet,
    /// `(r, t)` indices into [`CcTree::nodes`].
    pub children: Option<(usize, usize)>,
}

/// Binary decomposition tree along clique cutsets. Node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcTree {
    pub nodes: Vec<CcNode>,
}

/// A structural defect found by [`CcTree::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CcTreeViolation {
    RootNotWholeGraph,
    ChildNotProperSubset { node: usize, child: usize },
    ChildrenDoNotCover { node: usize },
    SeparatorNotClique { node: usize },
    SeparatorNotCutset { node: usize },
    SidesAdjacent { node: usize },
    TooManyInternalNodes { internal: usize, bound: usize },
    Unreachable { node: usize },
}

impl CcTree {
    pub fn root(&self) -> &CcNode {
        &self.nodes[0]
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_some()).count()
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.nodes.iter().filter(|n| n.children.is_none()).map(|n| n.set)
    }

    /// Separators `X_r ∩ X_t` of the internal nodes, in node order.
    pub fn separators(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.nodes
            .iter()
            .filter_map(|n| n.children.map(|(r, t)| self.nodes[r].set & self.nodes[t].set))
    }

    /// Checks every tree invariant except "leaves have no clique cutset",
    /// which needs exhaustive search and is left to the oracles.
    ///
    /// The internal-node bound is `n - 2` for connected graphs and `n - 1`
    /// otherwise: an edgeless graph on `n` vertices needs `n` leaves.
    pub fn check(&self, g: &Graph) -> Result<(), CcTreeViolation> {
        if self.nodes.is_empty() || self.root().set != g.vertices() {
            return Err(CcTreeViolation::RootNotWholeGraph);
        }
        let mut reached = vec![false; self.nodes.len()];
        reached[0] = true;
        for (i, node) in self.nodes.iter().enumerate() {
            let Some((r, t)) = node.children else { continue };
            for c in [r, t] {
                reached[c] = true;
                let cs = self.nodes[c].set;
                if !cs.is_subset(&node.set) || cs == node.set {
                    return Err(CcTreeViolation::ChildNotProperSubset { node: i, child: c });
                }
            }
            let (xr, xt) = (self.nodes[r].set, self.nodes[t].set);
            if xr | xt != node.set {
                return Err(CcTreeViolation::ChildrenDoNotCover { node: i });
            }
            let k = xr & xt;
            if !is_clique(g, k) {
                return Err(CcTreeViolation::SeparatorNotClique { node: i });
            }
            let rest = node.set - k;
            if rest.is_empty() || is_connected(g, rest) {
                return Err(CcTreeViolation::SeparatorNotCutset { node: i });
            }
            if !sets_anticomplete(g, xr - xt, xt - xr) {
                return Err(CcTreeViolation::SidesAdjacent { node: i });
            }
        }
        if let Some(node) = reached.iter().position(|r| !r) {
            return Err(CcTreeViolation::Unreachable { node });
        }
        let n = g.n();
        let bound = if is_connected(g, g.vertices()) { n.saturating_sub(2) } else { n - 1 };
        let internal = self.internal_count();
        if internal > bound {
            return Err(CcTreeViolation::TooManyInternalNodes { internal, bound });
        }
        Ok(())
    }
}

/// Decomposes `g` along clique cutsets until every leaf is an atom.
///
/// Disconnected pieces are split along the empty clique, peeling off their
/// smallest component. Connected pieces are split with the atom-peeling
/// procedure driven by a minimal elimination ordering (MCS-M), so each
/// connected piece on `m` vertices uses at most `m - 2` splits.
pub fn cc_decomposition_tree(g: &Graph) -> CcTree {
    let mut tree = CcTree { nodes: vec![CcNode { set: g.vertices(), children: None }] };
    decompose(g, &mut tree, 0);
    tree
}

fn push_split(tree: &mut CcTree, node: usize, xr: VertexSet, xt: VertexSet) -> (usize, usize) {
    let r = tree.nodes.len();
    tree.nodes.push(CcNode { set: xr, children: None });
    tree.nodes.push(CcNode { set: xt, children: None });
    tree.nodes[node].children = Some((r, r + 1));
    (r, r + 1)
}

fn decompose(g: &Graph, tree: &mut CcTree, node: usize) {
    let x = tree.nodes[node].set;
    let parts = components(g, x);
    if parts.len() >= 2 {
        let smallest = *parts.iter().min_by_key(|c| (c.len(), c.first())).unwrap();
        let (r, t) = push_split(tree, node, smallest, x - smallest);
        decompose(g, tree, r);
        decompose(g, tree, t);
        return;
    }
    let mut current = node;
    for (sep, comp) in atom_splits(g, x) {
        let piece = tree.nodes[current].set;
        let (_, t) = push_split(tree, current, comp | sep, piece - comp);
        current = t;
    }
}

/// Runs MCS-M on the connected piece `x`, returning the elimination order
/// (first eliminated first), the fill-in neighbourhoods and the set of
/// vertices whose higher neighbourhood is a minimal separator of the fill
/// graph.
fn mcs_m(g: &Graph, x: VertexSet) -> (Vec<usize>, Vec<VertexSet>, VertexSet) {
    let n = g.n();
    let size = x.len();
    let mut label = vec![0usize; n];
    let mut fill: Vec<VertexSet> = (0..n).map(|v| g.neighbours(v) & x).collect();
    let mut unnumbered = x;
    let mut order = vec![0usize; size];
    let mut generators = VertexSet::empty();
    let mut prev_label: Option<usize> = None;

    for i in (0..size).rev() {
        let v = unnumbered.iter().max_by_key(|&u| (label[u], std::cmp::Reverse(u))).unwrap();
        if prev_label.is_some_and(|p| label[v] <= p) {
            generators.insert(v);
        }
        prev_label = Some(label[v]);
        unnumbered.remove(v);
        order[i] = v;

        // Bottleneck search: best[y] is the smallest achievable maximum label
        // over the interior of a path v..y through unnumbered vertices.
        let mut best = vec![usize::MAX; n];
        let mut done = VertexSet::empty();
        let mut reached = VertexSet::empty();
        for y in (g.neighbours(v) & unnumbered).iter() {
            best[y] = 0;
            reached.insert(y);
        }
        // Interior labels are offset by one so that a direct edge (empty
        // interior) compares below every real label.
        while let Some(y) = (reached - done).iter().min_by_key(|&y| (best[y], y)) {
            done.insert(y);
            let through = best[y].max(label[y] + 1);
            for z in (g.neighbours(y) & (unnumbered - done)).iter() {
                if through < best[z] {
                    best[z] = through;
                    reached.insert(z);
                }
            }
        }
        let raised: Vec<usize> = reached.iter().filter(|&y| best[y] <= label[y]).collect();
        for y in raised {
            label[y] += 1;
            fill[v].insert(y);
            fill[y].insert(v);
        }
    }
    (order, fill, generators)
}

/// The (separator, component) pairs peeled off the connected piece `x`, in
/// order. Each `separator ∪ component` is an atom of the remaining piece.
fn atom_splits(g: &Graph, x: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    if x.len() <= 2 {
        return Vec::new();
    }
    let (order, fill, generators) = mcs_m(g, x);
    let mut later = x;
    let mut remaining = x;
    let mut out = Vec::new();
    for &v in &order {
        later.remove(v);
        if !generators.contains(v) || !remaining.contains(v) {
            continue;
        }
        let sep = fill[v] & later;
        if !sep.is_subset(&remaining) || !is_clique(g, sep) {
            continue;
        }
        let comp = component_of(g, remaining - sep, v);
        if (remaining - sep - comp).is_empty() {
            continue;
        }
        out.push((sep, comp));
        remaining -= comp;
    }
    out
}

/// Separators of the decomposition tree, deduplicated and sorted: every
/// clique cutset of `g` includes at least one of them.
pub fn clique_cutset_kernels(g: &Graph) -> Vec<VertexSet> {
    kernels_of(&cc_decomposition_tree(g))
}

pub(crate) fn kernels_of(tree: &CcTree) -> Vec<VertexSet> {
    let mut ks: Vec<VertexSet> = tree.separators().collect();
    ks.sort();
    ks.dedup();
    ks
}
