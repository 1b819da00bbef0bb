mod common;

use common::*;
use skewpart_core::generate::{cycle, path, rng, tusp8};
use skewpart_core::skew::{find_balanced, find_loose, find_loose_balanced, tight_list, unbalanced_tight_list};

#[test]
fn tight_list_matches_bruteforce_up_to_five_vertices() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let got = sides(&tight_list(&g));
            assert_eq!(got, brute_tight(&g), "{}", show(&g));
            assert!(got.len() <= n.pow(4));
        }
    }
}

#[test]
fn tight_list_matches_bruteforce_on_random_seven_vertex_graphs() {
    let mut r = rng(11);
    for g in random_graphs(&mut r, 400, 6..=7) {
        assert_eq!(sides(&tight_list(&g)), brute_tight(&g), "{}", show(&g));
    }
}

#[test]
fn unbalanced_tight_matches_bruteforce_on_berge_graphs() {
    let g = tusp8();
    assert_eq!(sides(&unbalanced_tight_list(&g)), brute_unbalanced_tight(&g));
    let mut r = rng(12);
    for g in berge_graphs(&mut r, 150, 4..=9, 4) {
        assert_eq!(sides(&unbalanced_tight_list(&g)), brute_unbalanced_tight(&g), "{}", show(&g));
    }
}

#[test]
fn unbalanced_tight_matches_bruteforce_on_all_small_berge_graphs() {
    let b = budget(6);
    for n in 1..=6 {
        for g in all_graphs(n).filter(|g| skewpart_core::oracles::is_berge_bruteforce(g, &b).unwrap()) {
            assert_eq!(sides(&unbalanced_tight_list(&g)), brute_unbalanced_tight(&g), "{}", show(&g));
        }
    }
}

#[test]
fn find_loose_agrees_with_bruteforce() {
    let check = |g: &skewpart_core::Graph| {
        let brute = brute_skew(g).iter().any(|p| p.is_loose());
        let got = find_loose(g);
        assert_eq!(got.is_some(), brute, "{}", show(g));
        if let Some(p) = got {
            assert!(skewpart_core::oracles::is_skew_by_definition(g, p.a, p.b));
            assert!(skewpart_core::oracles::loose_witness_by_definition(g, p.a, p.b).is_some());
        }
    };
    for n in 1..=5 {
        all_graphs(n).for_each(|g| check(&g));
    }
    let mut r = rng(13);
    random_graphs(&mut r, 300, 6..=8).iter().for_each(check);
}

#[test]
fn loose_balanced_on_berge_graphs() {
    let mut r = rng(14);
    for g in berge_graphs(&mut r, 150, 4..=9, 4) {
        let brute = brute_skew(&g).iter().any(|p| p.is_loose());
        let got = find_loose_balanced(&g);
        assert_eq!(got.is_some(), brute, "{}", show(&g));
        if let Some(p) = got {
            assert!(p.is_loose());
            assert!(is_balanced(&g, p.a, p.b), "{}", show(&g));
        }
    }
}

#[test]
fn find_balanced_agrees_with_bruteforce() {
    assert_eq!(find_balanced(&cycle(6)), None);
    assert!(find_balanced(&path(4)).is_some());
    let g = tusp8();
    assert_eq!(find_balanced(&g).is_some(), brute_has_balanced(&g));
    let mut r = rng(15);
    for g in berge_graphs(&mut r, 150, 4..=9, 4) {
        let got = find_balanced(&g);
        assert_eq!(got.is_some(), brute_has_balanced(&g), "{}", show(&g));
        if let Some(p) = got {
            assert!(skewpart_core::oracles::is_skew_by_definition(&g, p.a, p.b));
            assert!(is_balanced(&g, p.a, p.b), "{}", show(&g));
        }
    }
}
