//! Named graph families, the edge-count thresholds f_v / g_v, the per-size
//! lower bound on mvc, and an exhaustive verifier that checks both against
//! every small connected graph.
//!
//! The size/value landscape: connected graphs with n vertices and m edges
//! satisfy mvc(G) >= t + 2 exactly when m has climbed into the band
//! n + C(t,2) <= m <= n + C(t+1,2) - 1, and each band's bound is attained —
//! except at the very ends of the two bands just below the clique, where the
//! minimum jumps one higher. The families constructed here are the ones that
//! pin those minima down.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::solver::mvc_exact;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("invalid parameters for {family}: {reason}")]
    BadParameters {
        family: &'static str,
        reason: String,
    },
    #[error("exhaustive verification is limited to 3 <= n <= {max}, got {n}")]
    VerifyOutOfRange { n: usize, max: usize },
}

fn bad(family: &'static str, reason: impl Into<String>) -> ExtremalError {
    ExtremalError::BadParameters {
        family,
        reason: reason.into(),
    }
}

/// Parametrized graph families with known mvc behavior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Path on n >= 1 vertices: 0 - 1 - ... - n-1.
    Path { n: usize },
    /// Cycle on n >= 3 vertices.
    Cycle { n: usize },
    /// Complete graph on n >= 1 vertices.
    Complete { n: usize },
    /// Star on n >= 2 vertices, center 0.
    Star { n: usize },
    /// Two adjacent centers 0, 1 with a >= 1 and b >= 1 pendant leaves.
    DoubleStar { a: usize, b: usize },
    /// Clique on n-d+1 vertices with a pendant path of length d-1 attached
    /// at vertex n-d; diameter d, mvc = n-d+2 (3 <= d <= n-1).
    CliquePendantPath { n: usize, d: usize },
    /// Clique on t+2 vertices minus the edge {t, t+1}, rejoined by a path
    /// through the remaining n-t-2 vertices; m = n-1 + C(t+1,2) and
    /// mvc = t+2 (1 <= t <= n-5). Shows the per-size bound stays exact at
    /// the upper end of its band.
    CliqueEdgePath { n: usize, t: usize },
    /// Clique on t+1 vertices with a pendant path attached at vertex t and
    /// `extra` edges from the first path vertex back into the clique;
    /// m = n-1 + C(t,2) + extra, diameter n-t, mvc = t+2
    /// (1 <= t <= n-2, 0 <= extra <= t-1). Realizes every interior size of
    /// a band at its band's minimum mvc.
    EgExtremalG1 { n: usize, t: usize, extra: usize },
    /// Clique on n-2 vertices with a 2-edge tail: m = C(n-2,2) + 2,
    /// diameter 3, mvc = n-1 (n >= 5). The minimum at this exceptional
    /// size, one above its band's nominal value.
    CliquePlusP3 { n: usize },
}

pub fn construct(family: &Family) -> Result<Graph, ExtremalError> {
    match *family {
        Family::Path { n } => {
            if n < 1 {
                return Err(bad("path", "need n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Ok(Graph::from_edges(n, &edges).expect("valid path"))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle", "need n >= 3"));
            }
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            Ok(Graph::from_edges(n, &edges).expect("valid cycle"))
        }
        Family::Complete { n } => {
            if n < 1 {
                return Err(bad("complete", "need n >= 1"));
            }
            Ok(clique_graph(n))
        }
        Family::Star { n } => {
            if n < 2 {
                return Err(bad("star", "need n >= 2"));
            }
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Ok(Graph::from_edges(n, &edges).expect("valid star"))
        }
        Family::DoubleStar { a, b } => {
            if a < 1 || b < 1 {
                return Err(bad("double-star", "need a >= 1 and b >= 1"));
            }
            let n = a + b + 2;
            let mut edges = vec![(0, 1)];
            edges.extend((0..a).map(|i| (0, 2 + i)));
            edges.extend((0..b).map(|i| (1, 2 + a + i)));
            Graph::from_edges(n, &edges).map_err(|e| bad("double-star", e.to_string()))
        }
        Family::CliquePendantPath { n, d } => {
            if d < 3 || d + 1 > n {
                return Err(bad("clique-pendant-path", "need 3 <= d <= n-1"));
            }
            let mut edges = clique_edges(n - d + 1);
            edges.extend((n - d..n - 1).map(|v| (v, v + 1)));
            Graph::from_edges(n, &edges).map_err(|e| bad("clique-pendant-path", e.to_string()))
        }
        Family::CliqueEdgePath { n, t } => {
            if t < 1 || t + 5 > n {
                return Err(bad("clique-edge-path", "need 1 <= t <= n-5"));
            }
            let mut edges: Vec<_> = clique_edges(t + 2)
                .into_iter()
                .filter(|&e| e != (t, t + 1))
                .collect();
            edges.extend((t + 1..n - 1).map(|v| (v, v + 1)));
            edges.push((t, n - 1));
            Graph::from_edges(n, &edges).map_err(|e| bad("clique-edge-path", e.to_string()))
        }
        Family::EgExtremalG1 { n, t, extra } => {
            if t < 1 || t + 2 > n {
                return Err(bad("eg-extremal-g1", "need 1 <= t <= n-2"));
            }
            if extra + 1 > t {
                return Err(bad("eg-extremal-g1", "need 0 <= extra <= t-1"));
            }
            let mut edges = clique_edges(t + 1);
            edges.extend((t..n - 1).map(|v| (v, v + 1)));
            edges.extend((0..extra).map(|j| (j, t + 1)));
            Graph::from_edges(n, &edges).map_err(|e| bad("eg-extremal-g1", e.to_string()))
        }
        Family::CliquePlusP3 { n } => {
            if n < 5 {
                return Err(bad("clique-plus-p3", "need n >= 5"));
            }
            let mut edges = clique_edges(n - 2);
            edges.push((n - 3, n - 2));
            edges.push((n - 2, n - 1));
            Graph::from_edges(n, &edges).map_err(|e| bad("clique-plus-p3", e.to_string()))
        }
    }
}

fn clique_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(k * (k.max(1) - 1) / 2);
    for v in 1..k {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    edges
}

fn clique_graph(n: usize) -> Graph {
    Graph::from_edges(n, &clique_edges(n)).expect("valid clique")
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Minimum edge count that forces mvc(G) >= k on every connected graph of
/// order n (3 <= k <= n, n >= 3; `None` outside that range).
pub fn f_v(n: usize, k: usize) -> Option<usize> {
    if n < 3 || k < 3 || k > n {
        return None;
    }
    Some(if k == 3 {
        n - 1
    } else if k + 2 <= n {
        n + choose2(k - 2)
    } else {
        // k = n-1 or k = n: near-complete graphs appear one edge earlier.
        n - 1 + choose2(k - 2)
    })
}

/// Maximum edge count below which connectivity alone keeps mvc(G) <= k.
/// Only k = n admits one (stars reach mvc = n at tree size already, so no
/// smaller k works); by convention its value is the tree size n - 1.
pub fn g_v(n: usize, k: usize) -> Option<usize> {
    if n >= 3 && k == n {
        Some(n - 1)
    } else {
        None
    }
}

/// Sharp lower bound on mvc over connected graphs with n vertices and m
/// edges (`None` outside the connected-size range).
///
/// Trees and unicyclic sizes below n give 3. For m in the band
/// n + C(t,2) <= m <= n + C(t+1,2) - 1 the bound is t + 2, except at the
/// top ends of the bands t = n-4 and t = n-3 where it is t + 3.
pub fn eg_lower_bound(n: usize, m: usize) -> Option<u32> {
    if n < 3 || m + 1 < n || m > choose2(n) {
        return None;
    }
    if m < n {
        return Some(3);
    }
    for t in 1..=n - 2 {
        let lo = n + choose2(t);
        let hi = n + choose2(t + 1) - 1;
        if m < lo || m > hi {
            continue;
        }
        let exceptional = m == hi && (t + 3 == n || t + 4 == n);
        return Some((t + 2 + usize::from(exceptional)) as u32);
    }
    unreachable!("bands tile the whole size range n..=C(n,2)");
}

/// One size row of the exhaustive verification.
#[derive(Clone, Debug, Serialize)]
pub struct EgBandRow {
    pub m: usize,
    /// Closed-form bound for this (n, m).
    pub claimed: u32,
    /// Minimum mvc actually observed over every connected graph.
    pub observed: u32,
    /// graph6 of a graph attaining the observed minimum.
    pub witness: String,
    pub pass: bool,
}

/// One threshold row: the least m forcing mvc >= k everywhere.
#[derive(Clone, Debug, Serialize)]
pub struct EgThresholdRow {
    pub k: u32,
    pub claimed: usize,
    pub observed: usize,
    /// graph6 of a graph one edge below the threshold with mvc < k
    /// (absent when the threshold sits at tree size).
    pub witness_below: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EgReport {
    pub claim: String,
    pub n: usize,
    pub bands: Vec<EgBandRow>,
    pub thresholds: Vec<EgThresholdRow>,
    pub pass: bool,
    pub wall_ms: u128,
}

/// Check the per-size bound and both thresholds against every connected
/// graph of order n (3 <= n <= 8): the bound must hold, be attained at
/// every size, and the f_v thresholds must match the observed minima.
pub fn verify_erdos_gallai(n: usize) -> Result<EgReport, ExtremalError> {
    let max = crate::enumerate::ENUMERATION_MAX;
    if n < 3 || n > max {
        return Err(ExtremalError::VerifyOutOfRange { n, max });
    }
    let start = Instant::now();
    let graphs = crate::enumerate::enumerate_connected(n, None).expect("n within cap");
    let scanned: Vec<(usize, u32, String)> = graphs
        .par_iter()
        .map(|g| {
            let value = mvc_exact(g).expect("connected, within cap").value;
            (g.m(), value, crate::graph6::write_graph6(g))
        })
        .collect();

    let m_lo = n - 1;
    let m_hi = choose2(n);
    // Argmin per size, ties broken by graph6 string for determinism.
    let mut min_by_m: Vec<Option<(u32, String)>> = vec![None; m_hi - m_lo + 1];
    for (m, value, g6) in scanned {
        let slot = &mut min_by_m[m - m_lo];
        let better = match slot {
            None => true,
            Some((best, best_g6)) => value < *best || (value == *best && g6 < *best_g6),
        };
        if better {
            *slot = Some((value, g6));
        }
    }

    let mut bands = Vec::new();
    for (i, slot) in min_by_m.iter().enumerate() {
        let m = m_lo + i;
        let (observed, witness) = slot.clone().expect("every connected size is realized");
        let claimed = eg_lower_bound(n, m).expect("size in range");
        bands.push(EgBandRow {
            m,
            claimed,
            observed,
            witness,
            pass: claimed == observed,
        });
    }

    // suffix_min[i] = min observed over sizes >= m_lo + i.
    let mut suffix_min = vec![u32::MAX; bands.len()];
    for i in (0..bands.len()).rev() {
        let tail = if i + 1 < bands.len() {
            suffix_min[i + 1]
        } else {
            u32::MAX
        };
        suffix_min[i] = bands[i].observed.min(tail);
    }

    let mut thresholds = Vec::new();
    for k in 3..=n as u32 {
        let idx = suffix_min
            .iter()
            .position(|&v| v >= k)
            .expect("complete graphs reach mvc = n");
        let observed = m_lo + idx;
        let witness_below = if idx > 0 {
            debug_assert!(bands[idx - 1].observed < k);
            Some(bands[idx - 1].witness.clone())
        } else {
            None
        };
        let claimed = f_v(n, k as usize).expect("k in range");
        thresholds.push(EgThresholdRow {
            k,
            claimed,
            observed,
            witness_below,
            pass: claimed == observed,
        });
    }

    let pass = bands.iter().all(|row| row.pass) && thresholds.iter().all(|row| row.pass);
    Ok(EgReport {
        claim: "erdos-gallai".into(),
        n,
        bands,
        thresholds,
        pass,
        wall_ms: start.elapsed().as_millis(),
    })
}
