//! Per-pair triangle and 4-cycle counts, the unique-triangle /
//! unique-quadrilateral checkers, and strongly regular parameters.
//!
//! A quadrilateral is any 4-cycle subgraph; chords are allowed.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, VertexPair};

/// Number of triangles containing `p`, i.e. `|N(u) & N(v)|`.
pub fn triangles_through(g: &Graph, p: VertexPair) -> Result<usize, GraphError> {
    p.check_in(g.order())?;
    Ok(common_neighbours(g, p.u(), p.v()).count_ones() as usize)
}

/// Number of 4-cycles `u-v-w-x-u` of `g` that use `p = {u, v}` as an edge.
///
/// Each cycle is counted once: `w` is the cycle neighbour of `v` and `x` the
/// cycle neighbour of `u`.
pub fn c4_through(g: &Graph, p: VertexPair) -> Result<usize, GraphError> {
    p.check_in(g.order())?;
    Ok(c4_count(g, p.u(), p.v()))
}

#[inline]
fn common_neighbours(g: &Graph, u: usize, v: usize) -> u64 {
    g.row(u) & g.row(v)
}

#[inline]
fn c4_count(g: &Graph, u: usize, v: usize) -> usize {
    let mut ws = g.row(v) & !(1u64 << u);
    let xs = g.row(u) & !(1u64 << v);
    let mut count = 0;
    while ws != 0 {
        let w = ws.trailing_zeros() as usize;
        ws &= ws - 1;
        count += (g.row(w) & xs).count_ones() as usize;
    }
    count
}

/// Enumerates the `(w, x)` closing each 4-cycle through `{u, v}`.
fn c4_closers(g: &Graph, u: usize, v: usize) -> Vec<(usize, usize)> {
    let xs = g.row(u) & !(1u64 << v);
    bits(g.row(v) & !(1u64 << u))
        .flat_map(|w| bits(g.row(w) & xs).map(move |x| (w, x)))
        .collect()
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let b = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(b)
        }
    })
}

/// Per-pair counts used by the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeLocalProfile {
    pub pair: VertexPair,
    pub triangle_count: usize,
    pub c4_count: usize,
}

pub fn local_profile(g: &Graph, p: VertexPair) -> Result<EdgeLocalProfile, GraphError> {
    Ok(EdgeLocalProfile {
        pair: p,
        triangle_count: triangles_through(g, p)?,
        c4_count: c4_through(g, p)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    /// Every edge lies in exactly one triangle.
    P2,
    /// Every non-edge lies in exactly one 4-cycle of the complement.
    P3,
    /// Every edge has exactly one common neighbour.
    P2bar,
    /// Every non-edge has exactly two common neighbours.
    P3bar,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub pair: VertexPair,
    pub count: usize,
}

/// Verdict for one property, with every violating pair and, for satisfied
/// pairs, the vertices that witness uniqueness keyed by `"u,v"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    /// True when the quantified pair set is empty.
    pub vacuous: bool,
    pub violations: Vec<Violation>,
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

impl PropertyReport {
    fn collect<I>(property: Property, target: usize, pairs: &[VertexPair], mut eval: I) -> Self
    where
        I: FnMut(VertexPair) -> (usize, Vec<usize>),
    {
        let mut violations = Vec::new();
        let mut witnesses = BTreeMap::new();
        for &p in pairs {
            let (count, witness) = eval(p);
            if count == target {
                witnesses.insert(p.to_string(), witness);
            } else {
                violations.push(Violation { pair: p, count });
            }
        }
        PropertyReport {
            property,
            holds: violations.is_empty(),
            vacuous: pairs.is_empty(),
            violations,
            witnesses,
        }
    }
}

/// Every edge of `g` lies in exactly one triangle.
pub fn check_p2(g: &Graph) -> PropertyReport {
    PropertyReport::collect(Property::P2, 1, &g.edges(), |p| {
        let common = common_neighbours(g, p.u(), p.v());
        (common.count_ones() as usize, bits(common).collect())
    })
}

/// Every non-edge of `g` lies in exactly one 4-cycle of the complement.
/// Witnesses are `[w, x]` for the cycle `u-v-w-x-u`.
pub fn check_p3(g: &Graph) -> PropertyReport {
    let h = g.complement();
    PropertyReport::collect(Property::P3, 1, &g.non_edges(), |p| {
        let closers = c4_closers(&h, p.u(), p.v());
        let witness = match closers.as_slice() {
            [(w, x)] => vec![*w, *x],
            _ => Vec::new(),
        };
        (closers.len(), witness)
    })
}

/// Every edge has exactly one common neighbour.
pub fn check_p2bar(g: &Graph) -> PropertyReport {
    PropertyReport::collect(Property::P2bar, 1, &g.edges(), |p| {
        let common = common_neighbours(g, p.u(), p.v());
        (common.count_ones() as usize, bits(common).collect())
    })
}

/// Every non-edge has exactly one pair of common neighbours.
pub fn check_p3bar(g: &Graph) -> PropertyReport {
    PropertyReport::collect(Property::P3bar, 2, &g.non_edges(), |p| {
        let common = common_neighbours(g, p.u(), p.v());
        (common.count_ones() as usize, bits(common).collect())
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k (k - lambda - 1) == (v - k - 1) mu`.
    pub fn identity_holds(&self) -> bool {
        let (v, k, l, m) = (
            self.v as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        k * (k - l - 1) == (v - k - 1) * m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SrgOutcome {
    StronglyRegular(SrgParams),
    /// Empty or complete graph: lambda or mu is undefined.
    Degenerate {
        reason: String,
    },
    NotStronglyRegular {
        reason: String,
    },
}

impl SrgOutcome {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgOutcome::StronglyRegular(p) => Some(*p),
            _ => None,
        }
    }
}

fn uniform(g: &Graph, pairs: &[VertexPair], what: &str) -> Result<usize, String> {
    let mut seen: Option<(VertexPair, usize)> = None;
    for &p in pairs {
        let c = common_neighbours(g, p.u(), p.v()).count_ones() as usize;
        match seen {
            None => seen = Some((p, c)),
            Some((q, c0)) if c0 != c => {
                return Err(format!(
                    "{what} {{{q}}} has {c0} common neighbours but {{{p}}} has {c}"
                ))
            }
            _ => {}
        }
    }
    Ok(seen.map_or(0, |(_, c)| c))
}

pub fn srg_params(g: &Graph) -> SrgOutcome {
    let m = g.edge_count();
    if m == 0 || m == g.pair_count() {
        let reason = match g.order() {
            0 | 1 => "graph has no vertex pairs".to_string(),
            _ if m == 0 => "empty graph: lambda is undefined".to_string(),
            _ => "complete graph: mu is undefined".to_string(),
        };
        return SrgOutcome::Degenerate { reason };
    }
    let degrees = g.degrees();
    let k = degrees[0];
    if let Some(u) = degrees.iter().position(|&d| d != k) {
        return SrgOutcome::NotStronglyRegular {
            reason: format!(
                "not regular: vertex 0 has degree {k}, vertex {u} has degree {}",
                degrees[u]
            ),
        };
    }
    let lambda = match uniform(g, &g.edges(), "edge") {
        Ok(l) => l,
        Err(reason) => return SrgOutcome::NotStronglyRegular { reason },
    };
    let mu = match uniform(g, &g.non_edges(), "non-edge") {
        Ok(m) => m,
        Err(reason) => return SrgOutcome::NotStronglyRegular { reason },
    };
    let params = SrgParams {
        v: g.order(),
        k,
        lambda,
        mu,
    };
    debug_assert!(params.identity_holds());
    SrgOutcome::StronglyRegular(params)
}

/// Solves `k (k - lambda - 1) = (v - k - 1) mu` for a non-negative integer
/// `k`. Returns `None` when no integral root exists.
///
/// For `mu = 0` both `0` and `lambda + 1` are roots; the positive one is
/// returned.
pub fn solve_srg_degree(v: u64, lambda: u64, mu: u64) -> Option<u64> {
    if v == 0 {
        return None;
    }
    // k^2 + b k + c = 0 with b = mu - lambda - 1, c = -mu (v - 1)
    let b = mu as i128 - lambda as i128 - 1;
    let c = -(mu as i128) * (v as i128 - 1);
    let disc = b * b - 4 * c;
    let root = disc.isqrt();
    if root * root != disc || (root - b) % 2 != 0 {
        return None;
    }
    let k = (root - b) / 2;
    u64::try_from(k).ok()
}

/// True iff `g` contains a triangle.
pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|p| common_neighbours(g, p.u(), p.v()) != 0)
}

/// True iff `g` contains a 4-cycle: some pair has two common neighbours.
pub fn has_c4(g: &Graph) -> bool {
    g.pairs()
        .any(|p| common_neighbours(g, p.u(), p.v()).count_ones() >= 2)
}
