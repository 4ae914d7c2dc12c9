//! mvc of a graph and its complement, and the exhaustive check that the sum
//! stays in [n+3, 2n] whenever both are connected (which forces n >= 4).
//!
//! The lower bound rests on a complement dichotomy: a diameter above 3
//! forces the complement down to diameter 2 (so its mvc is n), and diameter
//! exactly 3 forces a spanning double star into the complement (two adjacent
//! centers, every other vertex a leaf on one of them — worth n-1 colors).
//! Both facts are checked graph by graph, not assumed.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::solver::{mvc_exact, SolverError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Graph,
    Complement,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NgError {
    #[error("the {0:?} side is disconnected; the sum needs both sides connected")]
    Disconnected(Side),
    #[error("graph has {n} vertices, over the solver cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("exhaustive verification is limited to 4 <= n <= {max}, got {n}")]
    VerifyOutOfRange { n: usize, max: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct NgRecord {
    pub n: usize,
    pub graph6: String,
    pub mvc: u32,
    pub mvc_complement: u32,
    pub sum: u32,
}

/// mvc(G) + mvc(complement of G); both sides must be connected.
pub fn ng_sum(g: &Graph) -> Result<NgRecord, NgError> {
    let gc = g.complement();
    if !g.is_connected() {
        return Err(NgError::Disconnected(Side::Graph));
    }
    if !gc.is_connected() {
        return Err(NgError::Disconnected(Side::Complement));
    }
    let solve = |h: &Graph| {
        mvc_exact(h).map_err(|e| match e {
            SolverError::TooLarge { n, cap } => NgError::TooLarge { n, cap },
            SolverError::Disconnected => unreachable!("connectivity checked above"),
        })
    };
    let a = solve(g)?.value;
    let b = solve(&gc)?.value;
    Ok(NgRecord {
        n: g.n(),
        graph6: crate::graph6::write_graph6(g),
        mvc: a,
        mvc_complement: b,
        sum: a + b,
    })
}

/// Whether `g` contains a spanning double star: an edge {u, v} such that
/// every other vertex attaches to u or to v, with at least one leaf on each
/// side (a star does not count).
pub fn has_spanning_double_star(g: &Graph) -> bool {
    let full = g.vertex_mask();
    for (u, v) in g.edges() {
        if g.closed_neighbors(u) | g.closed_neighbors(v) != full {
            continue;
        }
        let others = full & !(1 << u) & !(1 << v);
        let only_u = others & g.neighbors(u) & !g.neighbors(v);
        let only_v = others & g.neighbors(v) & !g.neighbors(u);
        let flex = others & g.neighbors(u) & g.neighbors(v);
        let splittable = (only_u != 0 && only_v != 0)
            || (only_u != 0 && flex != 0)
            || (only_v != 0 && flex != 0)
            || flex.count_ones() >= 2;
        if splittable {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug, Serialize)]
pub struct NgReport {
    pub n: usize,
    /// Unordered {G, complement} pairs in scope (both sides connected).
    pub pairs: usize,
    pub claimed_min: u32,
    pub claimed_max: u32,
    pub min_sum: u32,
    /// graph6 of a pair representative attaining the minimum sum.
    pub min_witness: String,
    pub max_sum: u32,
    pub max_witness: String,
    /// Orientations with diameter > 3 whose complement had to be diameter 2.
    pub diam_gt3_checked: usize,
    /// Orientations with diameter 3 whose complement had to contain a
    /// spanning double star.
    pub diam_eq3_checked: usize,
    /// `(graph6 of the pair representative, what went wrong)`.
    pub failures: Vec<(String, String)>,
    pub pass: bool,
    pub wall_ms: u128,
}

struct PairScan {
    g6: String,
    sum: u32,
    gt3: usize,
    eq3: usize,
    failures: Vec<(String, String)>,
}

/// Check the sum bounds and the complement dichotomy over every unordered
/// pair {G, complement} with both sides connected, 4 <= n <= 8.
pub fn verify_ng(n: usize) -> Result<NgReport, NgError> {
    let max = crate::enumerate::ENUMERATION_MAX;
    if !(4..=max).contains(&n) {
        return Err(NgError::VerifyOutOfRange { n, max });
    }
    let start = Instant::now();
    let graphs = crate::enumerate::enumerate_connected(n, None).expect("n within cap");
    let scans: Vec<PairScan> = graphs
        .par_iter()
        .filter_map(|g| {
            let gc = g.complement();
            if !gc.is_connected() {
                return None;
            }
            // One representative per unordered pair: the side with the
            // smaller canonical label (self-complementary graphs tie).
            let lg = crate::enumerate::canonical_form(g).expect("n within cap");
            let lc = crate::enumerate::canonical_form(&gc).expect("n within cap");
            if lg > lc {
                return None;
            }
            let record = ng_sum(g).expect("both sides connected, within cap");
            let g6 = record.graph6.clone();
            let mut gt3 = 0;
            let mut eq3 = 0;
            let mut failures = Vec::new();
            for (name, side, other) in [("graph", g, &gc), ("complement", &gc, g)] {
                let d = side.diameter().expect("connected");
                if d > 3 {
                    gt3 += 1;
                    if other.diameter() != Some(2) {
                        failures.push((
                            g6.clone(),
                            format!(
                                "{name} has diameter {d} > 3 but its complement has diameter {:?}, want 2",
                                other.diameter()
                            ),
                        ));
                    }
                } else if d == 3 {
                    eq3 += 1;
                    if !has_spanning_double_star(other) {
                        failures.push((
                            g6.clone(),
                            format!("{name} has diameter 3 but its complement lacks a spanning double star"),
                        ));
                    }
                }
            }
            Some(PairScan {
                g6,
                sum: record.sum,
                gt3,
                eq3,
                failures,
            })
        })
        .collect();

    let (claimed_min, claimed_max) = if n == 4 {
        (6, 6)
    } else {
        (n as u32 + 3, 2 * n as u32)
    };
    let mut min: Option<(u32, &str)> = None;
    let mut max: Option<(u32, &str)> = None;
    let mut failures = Vec::new();
    let mut gt3 = 0;
    let mut eq3 = 0;
    for scan in &scans {
        gt3 += scan.gt3;
        eq3 += scan.eq3;
        failures.extend(scan.failures.iter().cloned());
        if scan.sum < claimed_min || scan.sum > claimed_max {
            failures.push((
                scan.g6.clone(),
                format!("sum {} outside [{claimed_min}, {claimed_max}]", scan.sum),
            ));
        }
        let better_min = min.is_none_or(|(s, w)| scan.sum < s || (scan.sum == s && scan.g6.as_str() < w));
        if better_min {
            min = Some((scan.sum, &scan.g6));
        }
        let better_max = max.is_none_or(|(s, w)| scan.sum > s || (scan.sum == s && scan.g6.as_str() < w));
        if better_max {
            max = Some((scan.sum, &scan.g6));
        }
    }
    let (min_sum, min_witness) = min.expect("scope is nonempty for n >= 4");
    let (max_sum, max_witness) = max.expect("scope is nonempty for n >= 4");
    let pass = failures.is_empty();
    Ok(NgReport {
        n,
        pairs: scans.len(),
        claimed_min,
        claimed_max,
        min_sum,
        min_witness: min_witness.to_string(),
        max_sum,
        max_witness: max_witness.to_string(),
        diam_gt3_checked: gt3,
        diam_eq3_checked: eq3,
        failures,
        pass,
        wall_ms: start.elapsed().as_millis(),
    })
}
