//! Immutable simple undirected graphs with one `u64` adjacency row per vertex.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (one machine word per row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct VertexPair {
    u: usize,
    v: usize,
}

impl VertexPair {
    /// Normalizes `(a, b)` so the smaller index comes first.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(VertexPair { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(VertexPair { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub(crate) fn check_in(self, n: usize) -> Result<(), GraphError> {
        if self.v >= n {
            Err(GraphError::VertexOutOfRange { vertex: self.v, n })
        } else {
            Ok(())
        }
    }
}

impl From<VertexPair> for [usize; 2] {
    fn from(p: VertexPair) -> Self {
        [p.u, p.v]
    }
}

impl TryFrom<[usize; 2]> for VertexPair {
    type Error = GraphError;

    fn try_from(value: [usize; 2]) -> Result<Self, Self::Error> {
        VertexPair::new(value[0], value[1])
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Row `i` is the neighbour bitset of vertex `i`. Rows are symmetric, have a
/// clear diagonal and no bits at or above `n`. Values are never mutated after
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are accepted and
    /// collapse to a single edge.
    pub fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Ok(Graph::from_rows(n, rows))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::build(n, std::iter::empty())
    }

    /// Wraps raw adjacency rows. Callers guarantee the row invariants; they
    /// are re-checked in debug builds.
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        debug_assert_eq!(rows.len(), n);
        let g = Graph { n, rows };
        debug_assert!(g.invariants_hold(), "adjacency invariants violated");
        g
    }

    /// Symmetry, loop-freeness and range of every row.
    pub fn invariants_hold(&self) -> bool {
        let mask = low_mask(self.n);
        self.rows.len() == self.n
            && self.rows.iter().enumerate().all(|(u, &row)| {
                row & !mask == 0
                    && row >> u & 1 == 0
                    && (0..self.n).all(|v| (row >> v & 1) == (self.rows[v] >> u & 1))
            })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbour bitset of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of vertex pairs, `n choose 2`.
    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, &row)| !row & mask & !(1u64 << u))
            .collect();
        Graph::from_rows(self.n, rows)
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = VertexPair> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| VertexPair { u, v }))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<VertexPair> {
        self.pairs().filter(|p| self.has_edge(p.u, p.v)).collect()
    }

    /// Non-edges in lexicographic order.
    pub fn non_edges(&self) -> Vec<VertexPair> {
        self.pairs().filter(|p| !self.has_edge(p.u, p.v)).collect()
    }

    /// Relabels the graph so that vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for (u, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(self.n, rows)
    }

    /// Subgraph induced on the first `k` vertices.
    pub fn prefix(&self, k: usize) -> Graph {
        let k = k.min(self.n);
        let mask = low_mask(k);
        Graph::from_rows(k, self.rows[..k].iter().map(|r| r & mask).collect())
    }

    /// Appends one vertex adjacent to the vertices in `neighbours`
    /// (a bitset over `0..n`).
    pub fn extend(&self, neighbours: u64) -> Result<Graph, GraphError> {
        let n = self.n;
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n + 1));
        }
        debug_assert_eq!(neighbours & !low_mask(n), 0);
        let mut rows = Vec::with_capacity(n + 1);
        rows.extend(
            self.rows
                .iter()
                .enumerate()
                .map(|(u, &r)| r | (neighbours >> u & 1) << n),
        );
        rows.push(neighbours);
        Ok(Graph::from_rows(n + 1, rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|p| (p.u, p.v)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::build(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(65, []), Err(GraphError::TooManyVertices(65)));
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_small_graphs() {
        let g = k3();
        assert_eq!(g.edges().len(), 3);
        assert!(g.invariants_hold());
        let e = Graph::build(2, []).unwrap();
        assert_eq!(e.order(), 2);
        assert_eq!(e.edge_count(), 0);
        let b = bowtie();
        assert_eq!(b.degrees(), vec![4, 2, 2, 2, 2]);
        let g64 = Graph::build(64, [(0, 63)]).unwrap();
        assert!(g64.has_edge(63, 0));
        assert_eq!(g64.complement().edge_count(), 64 * 63 / 2 - 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(k3().complement(), Graph::empty(3).unwrap());
        let expected = Graph::build(5, [(1, 3), (3, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(bowtie().complement(), expected);
    }

    #[test]
    fn edge_lists() {
        let e: Vec<[usize; 2]> = k3().edges().into_iter().map(Into::into).collect();
        assert_eq!(e, vec![[0, 1], [0, 2], [1, 2]]);
        assert!(k3().non_edges().is_empty());
        assert_eq!(bowtie().edges().len(), 6);
        assert_eq!(bowtie().non_edges().len(), 4);
    }

    #[test]
    fn vertex_pair_normalizes() {
        let p = VertexPair::new(4, 1).unwrap();
        assert_eq!((p.u(), p.v()), (1, 4));
        assert!(VertexPair::new(2, 2).is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,4]");
        assert!(serde_json::from_str::<VertexPair>("[3,3]").is_err());
    }

    #[test]
    fn permute_and_extend() {
        let path = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let moved = path.permute(&[1, 0, 2]);
        assert_eq!(moved, Graph::build(3, [(1, 0), (0, 2)]).unwrap());
        let ext = path.extend(0b101).unwrap();
        assert_eq!(
            ext,
            Graph::build(4, [(0, 1), (1, 2), (0, 3), (2, 3)]).unwrap()
        );
        assert_eq!(ext.prefix(3), path);
    }
}
