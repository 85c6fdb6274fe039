mod common;

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use trisquare::canon::canonical_form;
use trisquare::enumerate::{enumerate_all_with, enumerate_levels, search_p2p3, SearchConfig};
use trisquare::extremal::{mantel_edge_limit, reiman_bound, within_reiman_bound};
use trisquare::graph6::{parse_graph6, to_graph6};
use trisquare::local::{check_p2, check_p3, has_c4, has_triangle};
use trisquare::oracle::{
    identity_string, labeled_class_count, labeled_graph, naive_isomorphic, naive_min_string,
};
use trisquare::{generate, GeneratorSpec};

#[test]
fn class_counts_match_labeled_brute_force() {
    let levels = enumerate_levels(6, 1).unwrap();
    for (n, level) in levels.iter().enumerate().skip(1) {
        assert_eq!(Some(level.len()), labeled_class_count(n), "n = {n}");
    }
    let counts: Vec<usize> = levels[1..].iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn larger_class_counts() {
    let levels = enumerate_levels(8, 1).unwrap();
    assert_eq!(levels[7].len(), 1044);
    assert_eq!(levels[8].len(), 12346);
}

#[test]
fn no_two_outputs_isomorphic_up_to_six() {
    for n in 1..=6 {
        let classes = trisquare::enumerate_all(n).unwrap();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                assert!(!naive_isomorphic(a.graph(), b.graph()), "{a:?} ~ {b:?}");
            }
        }
    }
}

#[test]
fn sampled_pairs_non_isomorphic_at_seven_and_eight() {
    let mut rng = StdRng::seed_from_u64(78);
    for n in [7, 8] {
        let classes = trisquare::enumerate_all(n).unwrap();
        let mut checked = 0;
        while checked < 10_000 {
            let i = rng.gen_range(0..classes.len());
            let j = rng.gen_range(0..classes.len());
            if i == j {
                continue;
            }
            assert!(!naive_isomorphic(classes[i].graph(), classes[j].graph()));
            checked += 1;
        }
    }
}

#[test]
fn every_labeled_graph_maps_into_the_output() {
    for n in 0..=6 {
        let classes: HashSet<String> = trisquare::enumerate_all(n)
            .unwrap()
            .into_iter()
            .map(|c| c.canon_g6().to_string())
            .collect();
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            let g = labeled_graph(n, mask);
            assert!(classes.contains(canonical_form(&g).unwrap().canon_g6()));
        }
    }
}

#[test]
fn representatives_are_permutation_minimal() {
    for n in 0..=7 {
        for class in trisquare::enumerate_all(n).unwrap() {
            assert_eq!(
                identity_string(class.graph()),
                naive_min_string(class.graph())
            );
        }
    }
}

#[test]
fn graph6_round_trip_on_every_class() {
    for class in enumerate_levels(8, 1).unwrap().iter().flatten() {
        let text = to_graph6(class.graph()).unwrap();
        assert_eq!(text, class.canon_g6());
        assert_eq!(&parse_graph6(&text).unwrap(), class.graph());
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let single = enumerate_all_with(7, 1).unwrap();
    let multi = enumerate_all_with(7, 4).unwrap();
    assert_eq!(single, multi);
    let cfg = SearchConfig::default();
    let a = search_p2p3(&cfg).unwrap();
    let b = search_p2p3(&SearchConfig { workers: 3, ..cfg }).unwrap();
    assert_eq!(a, b);
}

#[test]
fn pruned_and_unpruned_searches_agree() {
    for n_max in 1..=8 {
        for nontrivial_only in [true, false] {
            let cfg = SearchConfig {
                n_max,
                prune: true,
                workers: 1,
                nontrivial_only,
            };
            let pruned = search_p2p3(&cfg).unwrap();
            let unpruned = search_p2p3(&SearchConfig {
                prune: false,
                ..cfg
            })
            .unwrap();
            assert_eq!(pruned, unpruned, "n_max = {n_max}");
        }
    }
}

#[test]
fn search_finds_triangle_and_bowtie() {
    let hits = search_p2p3(&SearchConfig::default()).unwrap();
    let expected: Vec<String> = [GeneratorSpec::Complete(3), GeneratorSpec::Bowtie]
        .iter()
        .map(|s| {
            canonical_form(&generate(s).unwrap())
                .unwrap()
                .canon_g6()
                .to_string()
        })
        .collect();
    let found: Vec<String> = hits.iter().map(|c| c.canon_g6.clone()).collect();
    assert_eq!(found, expected);
    assert!(hits
        .iter()
        .all(|c| c.p2_report.holds && c.p3_report.holds && !c.trivial));
}

#[test]
fn lemma_invariants_over_full_enumeration() {
    for class in enumerate_levels(8, 1).unwrap().iter().skip(2).flatten() {
        let g = class.graph();
        if check_p2(g).holds && check_p3(g).holds {
            assert!(!has_triangle(&g.complement()), "{class:?}");
            assert!(!has_c4(g), "{class:?}");
        }
    }
}

#[test]
fn empirical_mantel_and_reiman() {
    let levels = enumerate_levels(8, 1).unwrap();
    for (n, level) in levels.iter().enumerate() {
        let n64 = n as u64;
        let mut best_triangle_free = 0;
        for class in level {
            let g = class.graph();
            let e = g.edge_count() as u64;
            if !has_triangle(g) {
                assert!(e <= mantel_edge_limit(n64));
                best_triangle_free = best_triangle_free.max(e);
            }
            if !has_c4(g) {
                assert!(within_reiman_bound(n64, e));
                assert!(e as f64 <= reiman_bound(n64) + 1e-9);
            }
        }
        assert_eq!(best_triangle_free, mantel_edge_limit(n64), "n = {n}");
    }
    // K3 meets the Reiman bound exactly at n = 3
    assert_eq!(reiman_bound(3), 3.0);
}
