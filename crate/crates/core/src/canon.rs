//! Canonical labelling by lexicographically minimal adjacency bit string.
//!
//! The bit string is the graph6 upper triangle: columns `j = 1..n`, rows
//! `i = 0..j` within a column. The canonical labelling is the vertex order
//! minimising that string over all `n!` orders.
//!
//! The search places one vertex per position. Once positions `0..j` are
//! fixed, column `j` of the string is fixed too, so only orders reaching the
//! smallest column value at every level can be minimal: each level keeps the
//! frontier of prefixes that tie for the minimum. Twin vertices (equal
//! neighbourhoods apart from each other) are interchangeable by an
//! automorphism, so only the lowest-indexed unplaced twin is tried.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical labelling supports at most {MAX_CANON_VERTICES} vertices, got {0}")]
pub struct CanonError(pub usize);

/// A graph stored in its canonical labelling together with its graph6 text.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalGraph {
    graph: Graph,
    canon_g6: String,
}

impl CanonicalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn canon_g6(&self) -> &str {
        &self.canon_g6
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl fmt::Debug for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGraph({})", self.canon_g6)
    }
}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canon_g6.cmp(&other.canon_g6)
    }
}

#[derive(Clone, Copy)]
struct Prefix {
    order: [u8; MAX_CANON_VERTICES],
    placed: u64,
}

fn twin_masks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x && g.row(x) & !(1u64 << y) == g.row(y) & !(1u64 << x))
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect()
}

/// Vertex order (`order[position] = vertex`) whose adjacency string is
/// lexicographically minimal.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.order();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let twins = twin_masks(g);
    let all = (1u64 << n) - 1;
    let mut frontier = vec![Prefix {
        order: [0; MAX_CANON_VERTICES],
        placed: 0,
    }];
    let mut next = Vec::new();
    for depth in 0..n {
        let mut best_col = u64::MAX;
        next.clear();
        for prefix in &frontier {
            let mut candidates = all & !prefix.placed;
            let unplaced = candidates;
            while candidates != 0 {
                let c = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                // an unplaced lower twin gives the same strings
                if twins[c] & unplaced & ((1u64 << c) - 1) != 0 {
                    continue;
                }
                let row = g.row(c);
                let col = prefix.order[..depth]
                    .iter()
                    .fold(0u64, |acc, &v| acc << 1 | (row >> v & 1));
                if col > best_col {
                    continue;
                }
                if col < best_col {
                    best_col = col;
                    next.clear();
                }
                let mut child = *prefix;
                child.order[depth] = c as u8;
                child.placed |= 1 << c;
                next.push(child);
            }
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    Ok(frontier[0].order[..n].iter().map(|&v| v as usize).collect())
}

/// Relabels `g` into canonical form. Isomorphic graphs, and only those,
/// share a canonical form.
pub fn canonical_form(g: &Graph) -> Result<CanonicalGraph, CanonError> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let graph = g.permute(&perm);
    let canon_g6 = to_graph6(&graph).expect("canonical graphs are small enough for graph6");
    Ok(CanonicalGraph { graph, canon_g6 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    #[test]
    fn triangle_is_fixed() {
        let k3 = Graph::build(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let c = canonical_form(&k3).unwrap();
        assert_eq!(c.graph(), &k3);
        assert_eq!(c.canon_g6(), "Bw");
    }

    #[test]
    fn paths_agree() {
        let a = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::build(3, [(2, 0), (0, 1)]).unwrap();
        let ca = canonical_form(&a).unwrap();
        assert_eq!(ca, canonical_form(&b).unwrap());
        // minimal string 011: edges {0,2} and {1,2}
        assert_eq!(ca.graph(), &Graph::build(3, [(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn idempotent_on_bowtie() {
        let bowtie = parse_graph6(
            &to_graph6(&Graph::build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap())
                .unwrap(),
        )
        .unwrap();
        let c = canonical_form(&bowtie).unwrap();
        assert_eq!(canonical_form(c.graph()).unwrap(), c);
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            canonical_form(&Graph::empty(11).unwrap()),
            Err(CanonError(11))
        );
        assert_eq!(
            canonical_form(&Graph::empty(0).unwrap())
                .unwrap()
                .canon_g6(),
            "?"
        );
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
