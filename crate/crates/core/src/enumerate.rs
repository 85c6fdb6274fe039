//! Isomorph-free enumeration of small graphs by vertex augmentation and the
//! exhaustive search for graphs satisfying both P2 and P3.
//!
//! Level `n` is built from the classes on `n - 1` vertices: every class gets
//! a new vertex joined to each of the `2^(n-1)` possible neighbourhoods, the
//! results are canonicalised and deduplicated by canonical graph6 text.
//! Levels are merged at a barrier and sorted, so the output does not depend
//! on the number of workers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalGraph, MAX_CANON_VERTICES};
use crate::graph::Graph;
use crate::local::{check_p2, check_p3, has_c4, PropertyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("vertex count {0} is outside 0..={MAX_CANON_VERTICES}")]
    OutOfRange(usize),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("failed to start worker pool: {0}")]
    Pool(String),
}

/// Search parameters for [`search_p2p3`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub n_max: usize,
    pub prune: bool,
    pub workers: usize,
    /// Drop the vacuous hits on 0 and 1 vertices.
    pub nontrivial_only: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_max: 8,
            prune: true,
            workers: 1,
            nontrivial_only: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), EnumerateError> {
        if !(1..=MAX_CANON_VERTICES).contains(&self.n_max) {
            return Err(EnumerateError::InvalidConfig(format!(
                "n_max must be in 1..={MAX_CANON_VERTICES}, got {}",
                self.n_max
            )));
        }
        if self.workers == 0 {
            return Err(EnumerateError::InvalidConfig(
                "workers must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// A graph satisfying P2 and P3, with the reports that show it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub canon_g6: String,
    pub n: usize,
    pub p2_report: PropertyReport,
    pub p3_report: PropertyReport,
    /// Both properties hold only vacuously.
    pub trivial: bool,
}

impl Certificate {
    /// `None` unless both P2 and P3 hold.
    pub fn issue(class: &CanonicalGraph) -> Option<Certificate> {
        let g = class.graph();
        let p2_report = check_p2(g);
        if !p2_report.holds {
            return None;
        }
        let p3_report = check_p3(g);
        if !p3_report.holds {
            return None;
        }
        Some(Certificate {
            canon_g6: class.canon_g6().to_string(),
            n: g.order(),
            trivial: p2_report.vacuous && p3_report.vacuous,
            p2_report,
            p3_report,
        })
    }
}

/// Runs `f` on a pool of `workers` threads, or inline for one worker.
pub(crate) fn with_workers<T: Send>(
    workers: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, EnumerateError> {
    if workers <= 1 {
        return Ok(f());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map(|pool| pool.install(f))
        .map_err(|e| EnumerateError::Pool(e.to_string()))
}

fn extensions(parent: &CanonicalGraph) -> Vec<CanonicalGraph> {
    let g = parent.graph();
    (0..1u64 << g.order())
        .map(|nbrs| {
            let child = g.extend(nbrs).expect("augmented order stays within limits");
            canonical_form(&child).expect("augmented order stays within canonical limit")
        })
        .collect()
}

/// Classes on `n + 1` vertices obtained by augmenting every class in
/// `parents` (all on `n` vertices), sorted by canonical graph6.
///
/// Must be called inside the intended thread pool; see [`with_workers`].
fn augment(parents: &[CanonicalGraph], parallel: bool) -> Vec<CanonicalGraph> {
    let set: BTreeSet<CanonicalGraph> = if parallel {
        parents
            .par_iter()
            .map(|p| extensions(p).into_iter().collect::<BTreeSet<_>>())
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            })
    } else {
        parents.iter().flat_map(extensions).collect()
    };
    set.into_iter().collect()
}

/// Public single-level augmentation.
pub fn augment_level(
    parents: &[CanonicalGraph],
    workers: usize,
) -> Result<Vec<CanonicalGraph>, EnumerateError> {
    if let Some(p) = parents.first() {
        if p.graph().order() >= MAX_CANON_VERTICES {
            return Err(EnumerateError::OutOfRange(p.graph().order() + 1));
        }
    }
    with_workers(workers, || augment(parents, workers > 1))
}

/// The single class on zero vertices, the seed of every enumeration.
pub fn seed_level() -> Vec<CanonicalGraph> {
    vec![canonical_form(&Graph::empty(0).expect("empty graph")).expect("order 0")]
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical graph6.
pub fn enumerate_all(n: usize) -> Result<Vec<CanonicalGraph>, EnumerateError> {
    enumerate_all_with(n, 1)
}

pub fn enumerate_all_with(n: usize, workers: usize) -> Result<Vec<CanonicalGraph>, EnumerateError> {
    if n > MAX_CANON_VERTICES {
        return Err(EnumerateError::OutOfRange(n));
    }
    if workers == 0 {
        return Err(EnumerateError::InvalidConfig(
            "workers must be positive".into(),
        ));
    }
    with_workers(workers, || {
        let mut level = seed_level();
        for _ in 0..n {
            level = augment(&level, workers > 1);
        }
        level
    })
}

/// Every level `0..=n_max`; `levels[k]` holds the classes on `k` vertices.
pub fn enumerate_levels(
    n_max: usize,
    workers: usize,
) -> Result<Vec<Vec<CanonicalGraph>>, EnumerateError> {
    if n_max > MAX_CANON_VERTICES {
        return Err(EnumerateError::OutOfRange(n_max));
    }
    with_workers(workers.max(1), || {
        let mut levels = vec![seed_level()];
        for k in 0..n_max {
            let next = augment(&levels[k], workers > 1);
            levels.push(next);
        }
        levels
    })
}

/// True when the prefix on the first `completed` vertices already rules out
/// every P2 and P3 extension:
///
/// * an edge lies in two or more triangles,
/// * the prefix contains a 4-cycle,
/// * a non-edge lies in two or more 4-cycles of the prefix complement.
///
/// Each count is over prefix vertices only and can only grow as vertices are
/// appended. The 4-cycle rule relies on P2 and P3 graphs being C4-free.
pub fn prune_partial(g: &Graph, completed: usize) -> bool {
    let h = g.prefix(completed);
    let overloaded_edge = h
        .edges()
        .iter()
        .any(|p| (h.row(p.u()) & h.row(p.v())).count_ones() >= 2);
    if overloaded_edge || has_c4(&h) {
        return true;
    }
    let hc = h.complement();
    h.non_edges()
        .iter()
        .any(|p| crate::local::c4_through(&hc, *p).expect("pair within prefix") >= 2)
}

/// All classes with at most `cfg.n_max` vertices satisfying P2 and P3,
/// ordered by vertex count and then canonical graph6.
pub fn search_p2p3(cfg: &SearchConfig) -> Result<Vec<Certificate>, EnumerateError> {
    cfg.validate()?;
    let parallel = cfg.workers > 1;
    with_workers(cfg.workers, || {
        let mut hits = Vec::new();
        let mut level = seed_level();
        for n in 0..=cfg.n_max {
            if n > 0 {
                level = augment(&level, parallel);
            }
            let certs: Vec<Certificate> = if parallel {
                level.par_iter().filter_map(Certificate::issue).collect()
            } else {
                level.iter().filter_map(Certificate::issue).collect()
            };
            hits.extend(
                certs
                    .into_iter()
                    .filter(|c| !(cfg.nontrivial_only && c.trivial)),
            );
            if cfg.prune {
                level.retain(|c| !prune_partial(c.graph(), n));
            }
        }
        hits
    })
}
