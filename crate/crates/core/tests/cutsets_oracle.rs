mod common;

use common::*;
use proptest::prelude::*;
use skewpart_core::cutsets::{cc_decomposition_tree, clique_cutset_kernels, find_star_cutset, find_t_cutset, is_cutset};
use skewpart_core::generate::{gnp, rng};
use skewpart_core::kennedy_reed::kennedy_reed_list;
use skewpart_core::oracles::{clique_cutsets_bruteforce, is_t_cutset_by_definition, star_cutset_bruteforce};

#[test]
fn star_cutset_existence_matches_bruteforce() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let brute = star_cutset_bruteforce(&g, &budget(n)).unwrap();
            let got = find_star_cutset(&g);
            assert_eq!(got.is_some(), brute.is_some(), "{}", show(&g));
            if let Some(s) = got {
                assert!(s.len() >= 2 && is_cutset(&g, s));
                assert!(s.iter().any(|c| skewpart_core::graph::is_complete_to(&g, c, s.without(c))));
            }
        }
    }
}

#[test]
fn t_cutsets_are_t_cutsets() {
    let mut r = rng(31);
    for g in random_graphs(&mut r, 500, 4..=8) {
        if let Some(b) = find_t_cutset(&g) {
            assert!(is_t_cutset_by_definition(&g, b), "{}", show(&g));
        }
    }
}

#[test]
fn kennedy_reed_covers_every_non_t_cutset_skew_partition() {
    let check = |g: &skewpart_core::Graph| {
        let list = kennedy_reed_list(g);
        let n = g.n();
        assert!(list.sets.len() <= n.pow(4));
        assert!(list.sets.iter().all(|&x| is_cutset(g, x)));
        for p in brute_skew(g) {
            if !is_t_cutset_by_definition(g, p.b) {
                assert!(list.sets.iter().any(|x| x.is_subset(&p.b)), "{} B={:?}", show(g), p.b);
            }
        }
    };
    for n in 1..=5 {
        all_graphs(n).for_each(|g| check(&g));
    }
    let mut r = rng(32);
    random_graphs(&mut r, 300, 6..=7).iter().for_each(|g| check(g));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cc_tree_contract(seed in any::<u64>(), n in 1usize..=8, p in 0.1f64..0.9) {
        let g = gnp(&mut rng(seed), n, p);
        let tree = cc_decomposition_tree(&g);
        prop_assert_eq!(tree.check(&g), Ok(()));
        let kernels = clique_cutset_kernels(&g);
        let connected = skewpart_core::graph::is_connected(&g, g.vertices());
        let bound = if connected { n.saturating_sub(2) } else { n - 1 };
        prop_assert!(kernels.len() <= bound, "{} kernels, bound {}", kernels.len(), bound);
        for c in clique_cutsets_bruteforce(&g, g.vertices()) {
            prop_assert!(kernels.iter().any(|k| k.is_subset(&c)), "{:?} misses {:?}", kernels, c);
        }
    }
}
