//! Deliberately naive reference implementations.
//!
//! Nothing here touches the bitset rows or any fast-path helper; every
//! adjacency question goes through [`Graph::has_edge`] one pair at a time.

use std::collections::HashSet;

use crate::graph::{Graph, VertexPair};

/// Largest order the per-pair counting oracles accept.
pub const MAX_COUNT_ORDER: usize = 12;
/// Largest order the permutation oracles accept.
pub const MAX_PERM_ORDER: usize = 8;
/// Largest order [`labeled_class_count`] accepts.
pub const MAX_LABELED_ORDER: usize = 6;

/// Triangles through `p`: every third vertex adjacent to both ends.
pub fn naive_triangles_through(g: &Graph, p: VertexPair) -> usize {
    assert!(g.order() <= MAX_COUNT_ORDER);
    let (u, v) = (p.u(), p.v());
    let mut count = 0;
    for z in 0..g.order() {
        if z != u && z != v && g.has_edge(u, z) && g.has_edge(v, z) {
            count += 1;
        }
    }
    count
}

/// 4-cycles `u-v-w-x-u` through `p`, over ordered pairs `(w, x)`.
pub fn naive_c4_through(g: &Graph, p: VertexPair) -> usize {
    assert!(g.order() <= MAX_COUNT_ORDER);
    let (u, v) = (p.u(), p.v());
    let mut count = 0;
    for w in 0..g.order() {
        for x in 0..g.order() {
            if w == x || w == u || w == v || x == u || x == v {
                continue;
            }
            if g.has_edge(v, w) && g.has_edge(w, x) && g.has_edge(x, u) {
                count += 1;
            }
        }
    }
    count
}

/// Calls `visit` with every permutation of `0..n` (Heap's algorithm).
/// Stops early when `visit` returns `true`; returns whether it did.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let mut perm: Vec<usize> = (0..n).collect();
    if visit(&perm) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if visit(&perm) {
                return true;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Tries all `n!` bijections.
pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    assert!(n <= MAX_PERM_ORDER);
    for_each_permutation(n, |perm| {
        (0..n).all(|a| (a + 1..n).all(|b| g.has_edge(a, b) == h.has_edge(perm[a], perm[b])))
    })
}

/// Upper-triangle bits, column by column, with `order[position] = vertex`.
fn bit_string(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

/// Lexicographically smallest adjacency string over all `n!` vertex orders.
pub fn naive_min_string(g: &Graph) -> Vec<bool> {
    assert!(g.order() <= MAX_PERM_ORDER);
    let mut best: Option<Vec<bool>> = None;
    for_each_permutation(g.order(), |order| {
        let s = bit_string(g, order);
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
        false
    });
    best.unwrap_or_default()
}

/// Adjacency string of `g` in its own labelling.
pub fn identity_string(g: &Graph) -> Vec<bool> {
    let order: Vec<usize> = (0..g.order()).collect();
    bit_string(g, &order)
}

/// Builds every labelled graph on `n` vertices from a pair mask.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::build(n, edges).expect("labelled graph in range")
}

/// Number of isomorphism classes among the `2^C(n,2)` labelled graphs,
/// bucketed by their `n!`-minimal adjacency string.
pub fn labeled_class_count(n: usize) -> Option<usize> {
    if n > MAX_LABELED_ORDER {
        return None;
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let classes: HashSet<Vec<bool>> = (0..1u64 << pairs)
        .map(|mask| naive_min_string(&labeled_graph(n, mask)))
        .collect();
    Some(classes.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(u: usize, v: usize) -> VertexPair {
        VertexPair::new(u, v).unwrap()
    }

    fn complete(n: usize) -> Graph {
        labeled_graph(n, (1u64 << (n * (n - 1) / 2)) - 1)
    }

    fn cycle(n: usize) -> Graph {
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn triangle_oracle() {
        assert_eq!(naive_triangles_through(&complete(3), pair(0, 1)), 1);
        assert_eq!(naive_triangles_through(&complete(4), pair(1, 3)), 2);
        assert_eq!(
            naive_triangles_through(&Graph::empty(5).unwrap(), pair(0, 4)),
            0
        );
    }

    #[test]
    fn c4_oracle() {
        assert_eq!(naive_c4_through(&cycle(4), pair(0, 1)), 1);
        assert_eq!(naive_c4_through(&complete(4), pair(0, 1)), 2);
        assert_eq!(naive_c4_through(&cycle(5), pair(0, 1)), 0);
    }

    #[test]
    fn isomorphism_oracle() {
        let paley5 = Graph::build(5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c5 = Graph::build(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(naive_isomorphic(&c5, &paley5));
        let path = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!naive_isomorphic(&complete(3), &path));
        assert!(!naive_isomorphic(&complete(3), &complete(4)));
    }

    #[test]
    fn permutation_count() {
        let mut seen = HashSet::new();
        for_each_permutation(5, |p| {
            seen.insert(p.to_vec());
            false
        });
        assert_eq!(seen.len(), 120);
        let mut calls = 0;
        for_each_permutation(0, |_| {
            calls += 1;
            false
        });
        assert_eq!(calls, 1);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_class_count(3), Some(4));
        assert_eq!(labeled_class_count(4), Some(11));
        assert_eq!(labeled_class_count(7), None);
    }
}
