//! Brute-force ground truth.
//!
//! Everything here is exhaustive and deliberately naive. The only code
//! shared with the production algorithms is [`Graph`] and [`VertexSet`];
//! connectivity, cliques and path enumeration are re-implemented locally so
//! that agreement between an oracle and an algorithm is evidence rather than
//! a tautology.

use thiserror::Error;

use crate::graph::{Graph, Path, VertexSet};
use crate::skew::{Balance, LooseWitness, SkewPartition, Tightness};

/// Size limits for exhaustive searches. Calls beyond a limit fail with
/// [`OracleError::BudgetExceeded`]; they never fall back to approximations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Vertex limit for path, hole and colouring searches.
    pub max_vertices: usize,
    /// Vertex limit for enumerating all `2^n` vertex partitions.
    pub max_partition_vertices: usize,
    /// Limit on the number of subsets visited by counting oracles.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 12, max_partition_vertices: 7, max_subsets: 20_000_000 }
    }
}

impl OracleBudget {
    /// A budget admitting partition enumeration on `n` vertices.
    pub fn with_partition_limit(n: usize) -> Self {
        OracleBudget { max_partition_vertices: n, max_vertices: n.max(12), ..Default::default() }
    }

    fn vertices(&self, what: &'static str, n: usize) -> Result<(), OracleError> {
        if n > self.max_vertices {
            return Err(OracleError::BudgetExceeded { what, size: n as u64, limit: self.max_vertices as u64 });
        }
        Ok(())
    }

    fn partitions(&self, what: &'static str, n: usize) -> Result<(), OracleError> {
        if n > self.max_partition_vertices {
            return Err(OracleError::BudgetExceeded {
                what,
                size: n as u64,
                limit: self.max_partition_vertices as u64,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what}: size {size} exceeds oracle budget {limit}")]
    BudgetExceeded { what: &'static str, size: u64, limit: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no Roussel-Rubio outcome holds for this configuration")]
    NoOutcome,
}

// ---------------------------------------------------------------------------
// local primitives

fn linked(g: &Graph, u: usize, v: usize, anti: bool) -> bool {
    u != v && g.adjacent(u, v) != anti
}

fn flood(g: &Graph, x: VertexSet, start: usize, anti: bool) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in x.iter() {
            if !seen.contains(w) && linked(g, v, w, anti) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen
}

fn parts(g: &Graph, x: VertexSet, anti: bool) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = x;
    while let Some(v) = rest.first() {
        let p = flood(g, rest, v, anti);
        rest -= p;
        out.push(p);
    }
    out
}

fn piece_count(g: &Graph, x: VertexSet, anti: bool) -> usize {
    parts(g, x, anti).len()
}

fn all_adjacent(g: &Graph, v: usize, x: VertexSet) -> bool {
    x.iter().all(|w| g.adjacent(v, w))
}

fn none_adjacent(g: &Graph, v: usize, x: VertexSet) -> bool {
    x.iter().all(|w| !g.adjacent(v, w))
}

fn subset_from_mask(mask: u64) -> VertexSet {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Largest clique by plain recursive search, with a witness.
pub fn max_clique_small(g: &Graph) -> VertexSet {
    fn grow(g: &Graph, current: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        let Some(v) = candidates.first() else {
            *best = current;
            return;
        };
        let mut with_v = VertexSet::empty();
        for w in candidates.iter() {
            if w != v && g.adjacent(v, w) {
                with_v.insert(w);
            }
        }
        grow(g, current.with(v), with_v, best);
        grow(g, current, candidates.without(v), best);
    }
    let mut best = VertexSet::empty();
    grow(g, VertexSet::empty(), g.vertices(), &mut best);
    best
}

pub fn clique_number_small(g: &Graph) -> usize {
    max_clique_small(g).len()
}

/// Stability number with a maximum stable set.
pub fn max_stable_small(g: &Graph) -> VertexSet {
    max_clique_small(&g.complement())
}

// ---------------------------------------------------------------------------
// Berge recognition

/// An odd hole (`antihole == false`) or odd antihole, in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddWitness {
    pub cycle: Vec<usize>,
    pub antihole: bool,
}

fn find_odd_hole(g: &Graph, anti: bool) -> Option<Vec<usize>> {
    fn extend(g: &Graph, anti: bool, path: &mut Vec<usize>) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        for w in s + 1..g.n() {
            if path.contains(&w) || !linked(g, last, w, anti) {
                continue;
            }
            let middle = path.get(1..path.len() - 1).unwrap_or(&[]);
            if middle.iter().any(|&p| linked(g, p, w, anti)) {
                continue;
            }
            if path.len() >= 2 && linked(g, s, w, anti) {
                // closing vertex: the hole is path + w
                if path.len() + 1 >= 5 && (path.len() + 1) % 2 == 1 {
                    path.push(w);
                    return true;
                }
                continue;
            }
            path.push(w);
            if extend(g, anti, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if extend(g, anti, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Searches for an odd hole, then an odd antihole.
pub fn find_odd_hole_or_antihole(g: &Graph, budget: &OracleBudget) -> Result<Option<OddWitness>, OracleError> {
    budget.vertices("berge check", g.n())?;
    for antihole in [false, true] {
        if let Some(cycle) = find_odd_hole(g, antihole) {
            return Ok(Some(OddWitness { cycle, antihole }));
        }
    }
    Ok(None)
}

pub fn is_berge_bruteforce(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    Ok(find_odd_hole_or_antihole(g, budget)?.is_none())
}

// ---------------------------------------------------------------------------
// colouring

/// Exact chromatic number with a witness colouring (colours `1..=χ`).
pub fn exact_chromatic(g: &Graph, budget: &OracleBudget) -> Result<(usize, Vec<usize>), OracleError> {
    budget.vertices("exact chromatic number", g.n())?;
    let c = exact_colouring(g);
    Ok((c.iter().copied().max().unwrap_or(0), c))
}

/// Exact colouring by DSatur branch and bound with a maximum-clique lower
/// bound. Not budget-gated: this is also the default leaf colourer, where
/// inputs are Berge and the clique bound is tight.
pub fn exact_colouring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let clique = max_clique_small(g);
    let greedy = dsatur_greedy(g);
    let greedy_k = greedy.iter().copied().max().unwrap_or(0);
    if greedy_k == clique.len() {
        return greedy;
    }
    for k in clique.len()..greedy_k {
        let mut colour = vec![0usize; n];
        // pre-colour the clique to break symmetry
        for (i, v) in clique.iter().enumerate() {
            colour[v] = i + 1;
        }
        if backtrack(g, k, &mut colour) {
            return colour;
        }
    }
    greedy
}

fn forbidden(g: &Graph, colour: &[usize], v: usize) -> u128 {
    g.neighbours(v)
        .iter()
        .filter(|&w| colour[w] != 0)
        .fold(0u128, |acc, w| acc | 1u128 << (colour[w] - 1))
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == 0)
            .max_by_key(|&v| (forbidden(g, &colour, v).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let f = forbidden(g, &colour, v);
        colour[v] = (!f).trailing_zeros() as usize + 1;
    }
    colour
}

fn backtrack(g: &Graph, k: usize, colour: &mut [usize]) -> bool {
    let n = g.n();
    let mut pick = None;
    let mut best = (0u32, 0usize);
    for v in 0..n {
        if colour[v] != 0 {
            continue;
        }
        let f = forbidden(g, colour, v);
        let sat = f.count_ones();
        if sat as usize >= k {
            return false;
        }
        let key = (sat, g.degree(v));
        if pick.is_none() || key > best {
            pick = Some(v);
            best = key;
        }
    }
    let Some(v) = pick else { return true };
    let f = forbidden(g, colour, v);
    let used = colour.iter().copied().max().unwrap_or(0);
    for c in 1..=k.min(used + 1) {
        if f >> (c - 1) & 1 == 0 {
            colour[v] = c;
            if backtrack(g, k, colour) {
                return true;
            }
        }
    }
    colour[v] = 0;
    false
}

// ---------------------------------------------------------------------------
// skew partitions

/// Definitional looseness test. Returns the first witness found: vertices of
/// `A` against anticomponents of `B` first, then vertices of `B` against
/// components of `A`.
pub fn loose_witness_by_definition(g: &Graph, a: VertexSet, b: VertexSet) -> Option<LooseWitness> {
    let anticomps = parts(g, b, true);
    for v in a.iter() {
        if let Some(&ac) = anticomps.iter().find(|&&ac| all_adjacent(g, v, ac)) {
            return Some(LooseWitness::CompleteToAnticomponent { vertex: v, anticomponent: ac });
        }
    }
    let comps = parts(g, a, false);
    for v in b.iter() {
        if let Some(&c) = comps.iter().find(|&&c| none_adjacent(g, v, c)) {
            return Some(LooseWitness::AnticompleteToComponent { vertex: v, component: c });
        }
    }
    None
}

/// `(A, B)` is a skew partition: `g[A]` disconnected, `g[B]` not anticonnected.
pub fn is_skew_by_definition(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    piece_count(g, a, false) >= 2 && piece_count(g, b, true) >= 2
}

/// Every skew partition of `g`, classified tight or loose, sorted by `B`.
pub fn enumerate_skew_partitions_bruteforce(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<Vec<SkewPartition>, OracleError> {
    budget.partitions("skew partition enumeration", g.n())?;
    let n = g.n();
    let all = g.vertices();
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let b = subset_from_mask(mask);
        let a = all - b;
        if !is_skew_by_definition(g, a, b) {
            continue;
        }
        let tightness = match loose_witness_by_definition(g, a, b) {
            Some(w) => Tightness::Loose(w),
            None => Tightness::Tight,
        };
        out.push(SkewPartition { a, b, tightness, balance: Balance::Unknown });
    }
    out.sort_by_key(|p| p.b);
    Ok(out)
}

/// Searches induced paths (in `g`, or in the complement when `anti`) from
/// `u` to `v` with nonempty interior inside `inner`, stopping at the first
/// one for which `stop` returns true.
fn search_paths(
    g: &Graph,
    u: usize,
    v: usize,
    inner: VertexSet,
    anti: bool,
    stop: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        g: &Graph,
        v: usize,
        inner: VertexSet,
        anti: bool,
        path: &mut Vec<usize>,
        stop: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        for w in inner.iter() {
            if path.contains(&w) || !linked(g, last, w, anti) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| linked(g, p, w, anti)) {
                continue;
            }
            path.push(w);
            if linked(g, w, v, anti) {
                // v may only touch the last interior vertex
                if !path[..path.len() - 1].iter().any(|&p| linked(g, p, v, anti)) {
                    path.push(v);
                    let hit = stop(path);
                    path.pop();
                    if hit {
                        path.pop();
                        return true;
                    }
                }
            } else if go(g, v, inner, anti, path, stop) {
                path.pop();
                return true;
            }
            path.pop();
        }
        false
    }
    if linked(g, u, v, anti) {
        return false;
    }
    let mut path = vec![u];
    go(g, v, inner, anti, &mut path, stop)
}

/// All induced `u`–`v` paths of `g` with interior in `inner` (or antipaths
/// when `anti`). Only paths with a nonempty interior are produced.
pub fn induced_paths(g: &Graph, u: usize, v: usize, inner: VertexSet, anti: bool) -> Vec<Path> {
    let mut out = Vec::new();
    search_paths(g, u, v, inner.without(u).without(v), anti, &mut |p| {
        out.push(Path { vertices: p.to_vec(), anti });
        false
    });
    out
}

/// Definitional balance test: every induced path between nonadjacent
/// `B`-vertices through `A` and every antipath between adjacent `A`-vertices
/// through `B` has even length.
pub fn is_balanced_bruteforce(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    budget.vertices("balance check", g.n())?;
    Ok(odd_certificate(g, a, b).is_none())
}

/// An odd path or antipath violating balance, if any.
pub fn odd_certificate(g: &Graph, a: VertexSet, b: VertexSet) -> Option<Path> {
    for (ends, inner, anti) in [(b, a, false), (a, b, true)] {
        for u in ends.iter() {
            for v in ends.iter().filter(|&v| v > u) {
                let mut found = None;
                search_paths(g, u, v, inner, anti, &mut |p| {
                    if (p.len() - 1) % 2 == 1 {
                        found = Some(p.to_vec());
                        true
                    } else {
                        false
                    }
                });
                if let Some(vertices) = found {
                    return Some(Path { vertices, anti });
                }
            }
        }
    }
    None
}

/// `B` is a T-cutset: `(V∖B, B)` is a skew partition and two vertices in
/// different components of `G[A]` are complete to one anticomponent of `G[B]`.
pub fn is_t_cutset_by_definition(g: &Graph, b: VertexSet) -> bool {
    let a = g.vertices() - b;
    if !is_skew_by_definition(g, a, b) {
        return false;
    }
    let comps = parts(g, a, false);
    for ac in parts(g, b, true) {
        let hits = comps.iter().filter(|c| c.iter().any(|v| all_adjacent(g, v, ac))).count();
        if hits >= 2 {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// cutsets

fn is_cutset_local(g: &Graph, x: VertexSet) -> bool {
    let rest = g.vertices() - x;
    piece_count(g, rest, false) >= 2
}

/// A star cutset found by scanning every vertex subset, if any.
pub fn star_cutset_bruteforce(g: &Graph, budget: &OracleBudget) -> Result<Option<VertexSet>, OracleError> {
    budget.vertices("star cutset search", g.n())?;
    for mask in 0..(1u64 << g.n()) {
        let s = subset_from_mask(mask);
        if s.len() < 2 {
            continue;
        }
        let centred = s.iter().any(|c| all_adjacent(g, c, s.without(c)));
        if centred && is_cutset_local(g, s) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// All clique cutsets of `g[x]`, including the empty clique when `g[x]` is
/// disconnected.
pub fn clique_cutsets_bruteforce(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    let members = x.to_vec();
    let mut out = Vec::new();
    for mask in 0..(1u64 << members.len()) {
        let s: VertexSet = members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let clique = s.iter().all(|v| all_adjacent(g, v, s.without(v)));
        if clique && piece_count(g, x - s, false) >= 2 {
            out.push(s);
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// stable sets and pellets

/// A connected vertex set of size at most `2α - 1` with stability number
/// exactly `α`, grown by the augmenting-path construction.
pub fn grow_stable(g: &Graph, budget: &OracleBudget) -> Result<VertexSet, OracleError> {
    budget.vertices("stable growth", g.n())?;
    if g.n() == 0 {
        return Err(OracleError::Precondition("graph is null".into()));
    }
    if piece_count(g, g.vertices(), false) != 1 {
        return Err(OracleError::Precondition("graph is disconnected".into()));
    }
    let mut target = max_stable_small(g);
    let alpha = target.len();
    let mut s = VertexSet::singleton(target.first().unwrap());
    let mut t = VertexSet::empty();
    while s.len() < alpha {
        debug_assert!(s.is_subset(&target) && t.len() < s.len());
        let path = shortest_path_between(g, s, target - s)
            .ok_or_else(|| OracleError::Precondition("no path to the stable set".into()))?;
        match path.len() {
            3 => {
                s.insert(path[2]);
                t.insert(path[1]);
            }
            4 => {
                let (p2, p3, p4) = (path[1], path[2], path[3]);
                let others: Vec<usize> =
                    (target - s).iter().filter(|&w| w != p4 && g.adjacent(p3, w)).collect();
                if let Some(&p4b) = others.first() {
                    s.insert(p4);
                    s.insert(p4b);
                    t.insert(p2);
                    t.insert(p3);
                } else {
                    target = target.without(p4).with(p3);
                    s.insert(p3);
                    t.insert(p2);
                }
            }
            k => {
                return Err(OracleError::Precondition(format!("augmenting path has {k} vertices")));
            }
        }
    }
    Ok(s | t)
}

/// Vertex sequence of a shortest path from `from` to `to` (BFS).
fn shortest_path_between(g: &Graph, from: VertexSet, to: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = from;
    let mut layer: Vec<usize> = from.to_vec();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &v in &layer {
            for w in 0..g.n() {
                if g.adjacent(v, w) && !seen.contains(w) {
                    seen.insert(w);
                    parent[w] = v;
                    if to.contains(w) {
                        let mut out = vec![w];
                        let mut x = w;
                        while !from.contains(x) {
                            x = parent[x];
                            out.push(x);
                        }
                        out.reverse();
                        return Some(out);
                    }
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    None
}

/// Number of `k`-pellets: `2k`-subsets `P` with `g[P]` anticonnected and
/// `ω(g[P]) ≥ k`.
pub fn count_pellets(g: &Graph, k: usize, budget: &OracleBudget) -> Result<u64, OracleError> {
    let n = g.n();
    let size = 2 * k;
    if size > n || k == 0 {
        return Ok(0);
    }
    let subsets = binomial(n as u64, size as u64);
    if subsets > budget.max_subsets {
        return Err(OracleError::BudgetExceeded { what: "pellet count", size: subsets, limit: budget.max_subsets });
    }
    let mut count = 0;
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let p: VertexSet = idx.iter().copied().collect();
        if piece_count(g, p, true) == 1 && clique_at_least(g, p, k) {
            count += 1;
        }
        // next combination
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(count)
}

fn clique_at_least(g: &Graph, x: VertexSet, k: usize) -> bool {
    let (h, _) = g.induced(x);
    clique_number_small(&h) >= k
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

// ---------------------------------------------------------------------------
// Roussel-Rubio outcomes

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RrOutcome {
    /// Two consecutive path vertices are complete to `X`.
    AdjacentPairComplete { index: usize },
    /// Length ≥ 5; nonadjacent `a, b ∈ X` attach to the interior only at the
    /// second and second-last vertex respectively.
    NonadjacentAttachments { a: usize, b: usize },
    /// Length 3; an odd antipath through `X` joins the two internal vertices.
    OddAntipath,
}

/// Decides which of the three outcomes holds for `(X, P)`.
pub fn roussel_rubio_witness(
    g: &Graph,
    x: VertexSet,
    p: &Path,
    budget: &OracleBudget,
) -> Result<RrOutcome, OracleError> {
    budget.vertices("Roussel-Rubio witness", g.n())?;
    let pre = |m: &str| Err(OracleError::Precondition(m.to_string()));
    if !is_berge_bruteforce(g, budget)? {
        return pre("graph is not Berge");
    }
    if x.is_empty() || piece_count(g, x, true) != 1 {
        return pre("X is not a nonempty anticonnected set");
    }
    let vs = &p.vertices;
    if p.anti || !p.is_valid_in(g) || vs.iter().any(|&v| x.contains(v)) {
        return pre("P is not an induced path of G∖X");
    }
    if !p.is_odd() {
        return pre("P has even length");
    }
    let k = vs.len();
    if !all_adjacent(g, vs[0], x) || !all_adjacent(g, vs[k - 1], x) {
        return pre("an end of P is not complete to X");
    }

    if let Some(index) = (0..k - 1).find(|&i| all_adjacent(g, vs[i], x) && all_adjacent(g, vs[i + 1], x)) {
        return Ok(RrOutcome::AdjacentPairComplete { index });
    }
    if p.len() >= 5 {
        let interior = &vs[1..k - 1];
        let touches = |w: usize| -> Vec<usize> { interior.iter().copied().filter(|&q| g.adjacent(w, q)).collect() };
        for a in x.iter() {
            for b in x.iter() {
                if a == b || g.adjacent(a, b) {
                    continue;
                }
                if touches(a) == [vs[1]] && touches(b) == [vs[k - 2]] {
                    return Ok(RrOutcome::NonadjacentAttachments { a, b });
                }
            }
        }
    }
    if p.len() == 3 {
        let mut odd = false;
        search_paths(g, vs[1], vs[2], x, true, &mut |q| {
            odd = (q.len() - 1) % 2 == 1;
            odd
        });
        if odd {
            return Ok(RrOutcome::OddAntipath);
        }
    }
    Err(OracleError::NoOutcome)
}
