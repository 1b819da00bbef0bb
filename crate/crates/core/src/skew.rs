//! Skew partitions: classification, the tight and unbalanced-tight lists,
//! the loose finder with its balancing loop, and the balanced finder.

use std::cell::{Cell, OnceCell};
use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::cutsets::{find_star_cutset, find_t_cutset};
use crate::graph::{
    anticomponent_of, anticomponents, components, enumerate_c4_holes, shortest_induced_path, Graph, Path,
    Square, VertexSet,
};
use crate::kennedy_reed::{kennedy_reed_list, CandidateCutsetList};

/// Why a skew partition is loose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LooseWitness {
    /// A vertex of `A` adjacent to every vertex of an anticomponent of `B`.
    CompleteToAnticomponent { vertex: usize, anticomponent: VertexSet },
    /// A vertex of `B` with no neighbour in a component of `A`.
    AnticompleteToComponent { vertex: usize, component: VertexSet },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tightness {
    Tight,
    Loose(LooseWitness),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Balance {
    Balanced,
    Unbalanced,
    Unknown,
}

/// A partition `(A, B)` of the vertices with `G[A]` disconnected and
/// `G[B]` not anticonnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkewPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub tightness: Tightness,
    pub balance: Balance,
}

impl SkewPartition {
    pub fn is_tight(&self) -> bool {
        self.tightness == Tightness::Tight
    }

    pub fn is_loose(&self) -> bool {
        !self.is_tight()
    }

    /// The same partition read in the complement graph, where the roles of
    /// the two sides swap. Tightness is kept, with the witness mirrored.
    pub fn flipped(&self) -> SkewPartition {
        let tightness = match self.tightness {
            Tightness::Tight => Tightness::Tight,
            Tightness::Loose(LooseWitness::CompleteToAnticomponent { vertex, anticomponent }) => {
                Tightness::Loose(LooseWitness::AnticompleteToComponent { vertex, component: anticomponent })
            }
            Tightness::Loose(LooseWitness::AnticompleteToComponent { vertex, component }) => {
                Tightness::Loose(LooseWitness::CompleteToAnticomponent { vertex, anticomponent: component })
            }
        };
        SkewPartition { a: self.b, b: self.a, tightness, balance: self.balance }
    }

    fn with_balance(mut self, balance: Balance) -> Self {
        self.balance = balance;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("balancing needs a graph without star cutsets (found one in the {})", if *.complement { "complement" } else { "graph" })]
    StarCutset { complement: bool },
    #[error("input is not a loose skew partition")]
    NotLoose,
    #[error("no vertex of B is anticomplete to a component of A; pass the complement")]
    Orientation,
    #[error("balancing step {step} left a partition that is not skew")]
    LostSkew { step: usize },
    #[error("balancing step {step} did not increase 2|B1| - |B|")]
    Stalled { step: usize },
}

fn loose_witness(g: &Graph, a: VertexSet, b: VertexSet, comps: &[VertexSet], anticomps: &[VertexSet]) -> Option<LooseWitness> {
    for v in a.iter() {
        if let Some(&ac) = anticomps.iter().find(|ac| ac.is_subset(&g.neighbours(v))) {
            return Some(LooseWitness::CompleteToAnticomponent { vertex: v, anticomponent: ac });
        }
    }
    for v in b.iter() {
        if let Some(&c) = comps.iter().find(|c| c.is_disjoint(&g.neighbours(v))) {
            return Some(LooseWitness::AnticompleteToComponent { vertex: v, component: c });
        }
    }
    None
}

/// Classifies `(A, B)`: `None` unless it is a skew partition of `g`,
/// otherwise the partition with its tightness resolved.
pub fn classify(g: &Graph, a: VertexSet, b: VertexSet) -> Option<SkewPartition> {
    if !a.is_disjoint(&b) || a | b != g.vertices() {
        return None;
    }
    let comps = components(g, a);
    if comps.len() < 2 {
        return None;
    }
    let anticomps = anticomponents(g, b);
    if anticomps.len() < 2 {
        return None;
    }
    let tightness = match loose_witness(g, a, b, &comps, &anticomps) {
        Some(w) => Tightness::Loose(w),
        None => Tightness::Tight,
    };
    Some(SkewPartition { a, b, tightness, balance: Balance::Unknown })
}

/// The square hole behind a square-based partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareBase {
    pub square: Square,
    /// The hole lives in the complement and the partition was flipped back.
    pub in_complement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareBased {
    pub partition: SkewPartition,
    pub base: SquareBase,
    /// The induced `a`–`c` path through `A` that fixed the parity.
    pub parity_path: Path,
}

/// Tight square-based skew partitions of `g`, one per distinct `B`.
///
/// Parity is read from a single shortest induced `a`–`c` path through `A`;
/// under tightness every such path has the same parity when `g` is Berge.
/// On non-Berge input the result may be wrong.
pub fn square_based_tight(g: &Graph) -> Vec<SquareBased> {
    let all = g.vertices();
    let found: Vec<SquareBased> = enumerate_c4_holes(g)
        .into_par_iter()
        .filter_map(|sq| {
            let b = (g.neighbours(sq.a) & g.neighbours(sq.c)) | (g.neighbours(sq.b) & g.neighbours(sq.d));
            let a = all - b;
            let comps = components(g, a);
            if comps.len() < 2 {
                return None;
            }
            let anticomps = anticomponents(g, b);
            if anticomps.len() < 2 || loose_witness(g, a, b, &comps, &anticomps).is_some() {
                return None;
            }
            let path = shortest_induced_path(g, sq.a, sq.c, a)?;
            if !path.is_odd() {
                return None;
            }
            let partition = SkewPartition { a, b, tightness: Tightness::Tight, balance: Balance::Unbalanced };
            Some(SquareBased { partition, base: SquareBase { square: sq, in_complement: false }, parity_path: path })
        })
        .collect();
    dedup_by_b(found, |s| s.partition.b)
}

fn dedup_by_b<T>(items: Vec<T>, key: impl Fn(&T) -> VertexSet) -> Vec<T> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<T> = items.into_iter().filter(|s| seen.insert(key(s))).collect();
    out.sort_by_key(|s| key(s));
    out
}

/// Every unbalanced tight skew partition of a Berge graph, with the square
/// that certifies it.
pub fn unbalanced_tight_certified(g: &Graph) -> Vec<SquareBased> {
    let mut all = square_based_tight(g);
    for mut s in square_based_tight(&g.complement()) {
        s.partition = s.partition.flipped();
        s.base.in_complement = true;
        s.parity_path.anti = true;
        all.push(s);
    }
    dedup_by_b(all, |s| s.partition.b)
}

/// Every unbalanced tight skew partition of a Berge graph, sorted by `B`.
pub fn unbalanced_tight_list(g: &Graph) -> Vec<SkewPartition> {
    unbalanced_tight_certified(g).into_iter().map(|s| s.partition).collect()
}

/// Every tight skew partition of `g`, sorted by `B`. Works on any graph.
pub fn tight_list(g: &Graph) -> Vec<SkewPartition> {
    SkewSearch::new(g).tight_list()
}

/// A loose skew partition of `g` if one exists.
pub fn find_loose(g: &Graph) -> Option<SkewPartition> {
    SkewSearch::new(g).find_loose()
}

/// A loose skew partition, balanced when `g` is Berge.
pub fn find_loose_balanced(g: &Graph) -> Option<SkewPartition> {
    SkewSearch::new(g).find_loose_balanced()
}

/// A balanced skew partition of a Berge graph, if one exists.
pub fn find_balanced(g: &Graph) -> Option<SkewPartition> {
    SkewSearch::new(g).find_balanced()
}

/// One run of the balancing loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceRun {
    pub partition: SkewPartition,
    pub steps: usize,
    /// `2|B1| - |B|` before the first move and after each move.
    pub potentials: Vec<i64>,
}

/// An anticomponent `B1` of `G[B]` and a component `A1` of `G[A]` such that
/// some vertex of `B1` has no neighbour in `A1`.
fn anchored_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let comps = components(g, a);
    for b1 in anticomponents(g, b) {
        for &a1 in &comps {
            if b1.iter().any(|v| g.neighbours(v).is_disjoint(&a1)) {
                return Some((b1, a1));
            }
        }
    }
    None
}

/// Moves vertices across a loose skew partition until neither balancing
/// move applies.
///
/// Requires that neither `g` nor its complement has a star cutset and that
/// some vertex of an anticomponent `B1` of `B` is anticomplete to a
/// component `A1` of `A` (otherwise pass the complement). Each move raises
/// `2|B1| - |B|`, so the loop stops within `2n` moves.
pub fn balance_loose(g: &Graph, sp: &SkewPartition) -> Result<BalanceRun, SkewError> {
    if find_star_cutset(g).is_some() {
        return Err(SkewError::StarCutset { complement: false });
    }
    if find_star_cutset(&g.complement()).is_some() {
        return Err(SkewError::StarCutset { complement: true });
    }
    match classify(g, sp.a, sp.b) {
        Some(p) if p.is_loose() => {}
        _ => return Err(SkewError::NotLoose),
    }
    let (mut a, mut b) = (sp.a, sp.b);
    let (mut b1, mut a1) = anchored_pair(g, a, b).ok_or(SkewError::Orientation)?;
    let potential = |b1: VertexSet, b: VertexSet| 2 * b1.len() as i64 - b.len() as i64;
    let mut potentials = vec![potential(b1, b)];
    let mut steps = 0;

    loop {
        if let Some(v) = (b - b1).iter().find(|&v| g.neighbours(v).is_disjoint(&a1)) {
            // B1 stays an anticomponent and A1 a component
            a.insert(v);
            b.remove(v);
        } else if let Some(v) = a.iter().find(|&v| {
            let nv = g.neighbours(v);
            !b1.is_subset(&nv) && anticomponents(g, b).iter().any(|&b2| b2 != b1 && b2.is_subset(&nv))
        }) {
            a.remove(v);
            b.insert(v);
            let witnesses: Vec<usize> = b1.iter().filter(|&w| g.neighbours(w).is_disjoint(&a1)).collect();
            b1 = anticomponent_of(g, b, b1.first().unwrap());
            let anchored = |c: &VertexSet| witnesses.iter().any(|&w| b1.contains(w) && g.neighbours(w).is_disjoint(c));
            let comps = components(g, a);
            a1 = match comps.iter().find(|c| c.is_subset(&a1) && anchored(c)) {
                Some(&c) => c,
                None => match anchored_pair(g, a, b) {
                    Some((nb1, na1)) if b1.is_subset(&nb1) => na1,
                    _ => return Err(SkewError::Orientation),
                },
            };
        } else {
            break;
        }
        steps += 1;
        if classify(g, a, b).is_none() {
            return Err(SkewError::LostSkew { step: steps });
        }
        let p = potential(b1, b);
        if p <= *potentials.last().unwrap() || steps > 2 * g.n() {
            return Err(SkewError::Stalled { step: steps });
        }
        potentials.push(p);
    }
    let partition = classify(g, a, b).ok_or(SkewError::LostSkew { step: steps })?;
    if partition.is_tight() {
        return Err(SkewError::NotLoose);
    }
    Ok(BalanceRun { partition, steps, potentials })
}

/// Skew-partition searches on one graph, sharing a lazily built candidate
/// cutset list and counting the candidates examined.
pub struct SkewSearch<'g> {
    g: &'g Graph,
    kr: OnceCell<CandidateCutsetList>,
    examined: Cell<usize>,
}

impl<'g> SkewSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        SkewSearch { g, kr: OnceCell::new(), examined: Cell::new(0) }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn candidate_list(&self) -> &CandidateCutsetList {
        self.kr.get_or_init(|| kennedy_reed_list(self.g))
    }

    /// Candidate sets tested so far (list members and square holes).
    pub fn candidates_examined(&self) -> usize {
        self.examined.get()
    }

    fn count(&self, k: usize) {
        self.examined.set(self.examined.get() + k);
    }

    pub fn tight_list(&self) -> Vec<SkewPartition> {
        let g = self.g;
        let all = g.vertices();
        let list = &self.candidate_list().sets;
        self.count(list.len());
        list.par_iter()
            .filter_map(|&b| classify(g, all - b, b).filter(SkewPartition::is_tight))
            .collect()
    }

    pub fn unbalanced_tight_list(&self) -> Vec<SkewPartition> {
        self.count(enumerate_c4_holes(self.g).len() + enumerate_c4_holes(&self.g.complement()).len());
        unbalanced_tight_list(self.g)
    }

    pub fn find_loose(&self) -> Option<SkewPartition> {
        let g = self.g;
        let all = g.vertices();
        if let Some(b) = find_star_cutset(g) {
            return classify(g, all - b, b);
        }
        if let Some(b) = find_t_cutset(g) {
            return classify(g, all - b, b);
        }
        for &b in &self.candidate_list().sets {
            self.count(1);
            if let Some(sp) = classify(g, all - b, b).filter(SkewPartition::is_loose) {
                return Some(sp);
            }
        }
        None
    }

    pub fn find_loose_balanced(&self) -> Option<SkewPartition> {
        let g = self.g;
        let all = g.vertices();
        if let Some(b) = find_star_cutset(g) {
            return classify(g, all - b, b);
        }
        let gc = g.complement();
        if let Some(b) = find_star_cutset(&gc) {
            return classify(g, b, all - b);
        }
        let sp = self.find_loose()?;
        if anchored_pair(g, sp.a, sp.b).is_some() {
            balance_loose(g, &sp).ok().map(|run| run.partition)
        } else {
            let flipped = classify(&gc, sp.b, sp.a)?;
            balance_loose(&gc, &flipped).ok().and_then(|run| classify(g, run.partition.b, run.partition.a))
        }
    }

    pub fn find_balanced(&self) -> Option<SkewPartition> {
        if let Some(sp) = self.find_loose_balanced() {
            return Some(sp.with_balance(Balance::Balanced));
        }
        let unbalanced: BTreeSet<VertexSet> = self.unbalanced_tight_list().into_iter().map(|p| p.b).collect();
        self.tight_list()
            .into_iter()
            .find(|p| !unbalanced.contains(&p.b))
            .map(|p| p.with_balance(Balance::Balanced))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, path, set, tusp8};
    use crate::oracles::{is_balanced_bruteforce, OracleBudget};

    #[test]
    fn classify_examples() {
        let p4 = path(4);
        let sp = classify(&p4, set(&[0, 3]), set(&[1, 2])).unwrap();
        assert_eq!(
            sp.tightness,
            Tightness::Loose(LooseWitness::CompleteToAnticomponent { vertex: 0, anticomponent: set(&[1]) })
        );
        assert_eq!(classify(&cycle(4), set(&[0, 2]), set(&[1, 3])), None);
        let g = tusp8();
        assert!(classify(&g, set(&[0, 1, 2, 3]), set(&[4, 5, 6, 7])).unwrap().is_tight());
        assert_eq!(classify(&p4, set(&[0, 3]), set(&[1])), None);
    }

    #[test]
    fn square_based_examples() {
        let g = tusp8();
        let sq = square_based_tight(&g);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].partition.b, set(&[4, 5, 6, 7]));
        // x1-y1-x2-y2 in canonical form a=x1(4), b=y1(6), c=x2(5), d=y2(7)
        assert_eq!(sq[0].base.square, Square { a: 4, b: 6, c: 5, d: 7 });
        assert!(sq[0].parity_path.is_odd());
        assert!(square_based_tight(&cycle(6)).is_empty());
        assert!(square_based_tight(&path(5)).is_empty());
    }

    #[test]
    fn unbalanced_tight_examples() {
        let g = tusp8();
        let ut = unbalanced_tight_list(&g);
        assert_eq!(ut.len(), 1);
        assert_eq!((ut[0].a, ut[0].b), (set(&[0, 1, 2, 3]), set(&[4, 5, 6, 7])));
        let utc = unbalanced_tight_list(&g.complement());
        assert_eq!(utc.len(), 1);
        assert_eq!((utc[0].a, utc[0].b), (set(&[4, 5, 6, 7]), set(&[0, 1, 2, 3])));
    }

    #[test]
    fn tight_list_examples() {
        let g = tusp8();
        assert!(tight_list(&g).iter().any(|p| p.b == set(&[4, 5, 6, 7])));
        assert!(tight_list(&path(4)).is_empty());
        assert!(tight_list(&cycle(6)).is_empty());
    }

    #[test]
    fn loose_examples() {
        let sp = find_loose(&path(4)).unwrap();
        assert!(sp.is_loose());
        assert_eq!(sp.b, set(&[1, 2]));
        assert_eq!(find_loose(&cycle(5)), None);
        assert!(find_loose(&complete_bipartite(1, 3)).unwrap().is_loose());
    }

    #[test]
    fn loose_balanced_examples() {
        let b = OracleBudget::default();
        let p4 = path(4);
        let sp = find_loose_balanced(&p4).unwrap();
        assert!(is_balanced_bruteforce(&p4, sp.a, sp.b, &b).unwrap());
        assert_eq!(find_loose_balanced(&cycle(6)), None);
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(find_balanced(&cycle(6)), None);
        let sp = find_balanced(&path(4)).unwrap();
        assert_eq!(sp.balance, Balance::Balanced);
    }

    #[test]
    fn balance_loose_rejects_star_cutsets() {
        let p4 = path(4);
        let sp = classify(&p4, set(&[0, 3]), set(&[1, 2])).unwrap();
        assert_eq!(balance_loose(&p4, &sp), Err(SkewError::StarCutset { complement: false }));
    }

    #[test]
    fn flipped_swaps_sides() {
        let sp = classify(&path(4), set(&[0, 3]), set(&[1, 2])).unwrap();
        let f = sp.flipped();
        assert_eq!((f.a, f.b), (sp.b, sp.a));
        assert_eq!(f.flipped(), sp);
    }
}
