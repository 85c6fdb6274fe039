#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use trisquare::oracle::labeled_graph;
use trisquare::Graph;

/// Graphs on `lo..=hi` vertices with independent fair edges.
pub fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::build(n, edges).unwrap()
        })
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut mask = 0u64;
    for b in 0..pairs {
        if rng.gen_bool(p) {
            mask |= 1 << b;
        }
    }
    labeled_graph(n, mask)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
