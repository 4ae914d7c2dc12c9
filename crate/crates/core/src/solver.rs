//! Exact computation of mvc(G), the monochromatic vertex-connection number.
//!
//! Two independent engines:
//!
//! * [`mvc_exact`] — the production solver. It searches over *families* of
//!   vertex-disjoint connected vertex sets (the nontrivial color classes of a
//!   normalized coloring) in increasing order of total waste
//!   w = Σ (|Sᵢ| − 1), and stops at the first family whose serving masks
//!   cover every vertex pair. mvc = n − w for that minimal w. The waste
//!   window is [d − 2, n − 3]: the diameter bound forces waste ≥ d − 2, and
//!   the leafy spanning-tree coloring guarantees mvc ≥ 3 for n ≥ 3.
//! * [`mvc_oracle`] — a deliberately naive reference: every set partition of
//!   the vertices (restricted growth strings, no connectivity restriction,
//!   no pruning) is checked with the public coloring predicate, and the best
//!   color count wins. Only for small n; exists so the solver's shortcuts
//!   are testable against something that has none.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{self, VertexColoring};
use crate::graph::Graph;

/// Default vertex cap for [`mvc_exact`]; the family search is exponential.
pub const DEFAULT_CAP: usize = 12;

/// Vertex cap for [`mvc_oracle`]; Bell(8) = 4140 partitions is the limit of
/// "instant".
pub const ORACLE_MAX: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("mvc is defined for connected graphs; this graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, over the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Exact value plus a machine-checkable witness coloring and search stats.
#[derive(Clone, Debug, Serialize)]
pub struct SolverResult {
    pub value: u32,
    /// An MVC-coloring attaining `value` colors, dense ids, deterministic.
    pub witness: VertexColoring,
    /// Families whose coverage was evaluated.
    pub nodes: u64,
    /// Waste budget at which the search succeeded (0 on the diameter-2 path).
    pub budget: u32,
}

pub fn mvc_exact(g: &Graph) -> Result<SolverResult, SolverError> {
    mvc_exact_capped(g, DEFAULT_CAP)
}

pub fn mvc_exact_capped(g: &Graph, cap: usize) -> Result<SolverResult, SolverError> {
    let n = g.n();
    if n > cap {
        return Err(SolverError::TooLarge { n, cap });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let d = g.diameter().expect("connected graph has a diameter");
    if d <= 2 {
        // Every pair is adjacent or shares a neighbor; all-distinct works and
        // n colors cannot be beaten.
        return Ok(SolverResult {
            value: n as u32,
            witness: VertexColoring::distinct(n),
            nodes: 0,
            budget: 0,
        });
    }
    // d >= 3 implies n >= 4 here.
    let mut search = FamilySearch {
        g,
        n,
        nodes: 0,
        classes: Vec::new(),
    };
    for budget in (d - 2)..=(n as u32 - 3) {
        if let Some(classes) = search.solve(budget) {
            let witness = coloring_from_classes(n, &classes);
            debug_assert_eq!(coloring::unserved_pair(g, &witness), Ok(None));
            debug_assert_eq!(witness.color_count(), n as u32 - budget);
            return Ok(SolverResult {
                value: n as u32 - budget,
                witness,
                nodes: search.nodes,
                budget,
            });
        }
    }
    unreachable!("every connected graph on n >= 3 vertices has an MVC-coloring of waste <= n - 3");
}

/// Depth-first search over families of vertex-disjoint connected classes
/// with a fixed total waste. Classes are anchored at their minimum vertex
/// and anchors strictly increase, so each family is generated exactly once.
/// Each class is grown by exclusive-neighbor extension (ESU), which emits
/// every connected superset of the anchor within the allowed vertices once.
struct FamilySearch<'a> {
    g: &'a Graph,
    n: usize,
    nodes: u64,
    classes: Vec<u64>,
}

impl FamilySearch<'_> {
    fn solve(&mut self, budget: u32) -> Option<Vec<u64>> {
        debug_assert!(self.classes.is_empty());
        if self.place(budget, 0, 0) {
            Some(self.classes.clone())
        } else {
            debug_assert!(self.classes.is_empty());
            None
        }
    }

    /// Place the next class, spending exactly `budget` more waste in total.
    fn place(&mut self, budget: u32, min_anchor: usize, used: u64) -> bool {
        if budget == 0 {
            self.nodes += 1;
            return self.family_covers(used);
        }
        for a in min_anchor..self.n {
            if used & (1 << a) != 0 {
                continue;
            }
            // Class members beyond the anchor: unused and of higher index.
            let allowed = !used & self.g.vertex_mask() & !((1u64 << a) | ((1u64 << a) - 1));
            let ext = self.g.neighbors(a) & allowed;
            if self.grow(1 << a, ext, self.g.closed_neighbors(a), allowed, budget, used, a) {
                return true;
            }
        }
        false
    }

    /// ESU growth: `class` always contains the anchor, `ext` holds the
    /// extension candidates, `blob` is class ∪ N(class) for the exclusive
    /// neighborhood test. A class of size s spends s - 1 waste.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        class: u64,
        ext: u64,
        blob: u64,
        allowed: u64,
        budget: u32,
        used: u64,
        anchor: usize,
    ) -> bool {
        let size = class.count_ones();
        if size >= 2 {
            self.classes.push(class);
            let ok = self.place(budget - (size - 1), anchor + 1, used | class);
            if ok {
                return true;
            }
            self.classes.pop();
        }
        if size <= budget {
            let mut rest = ext;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next_ext = rest | (self.g.neighbors(w) & allowed & !blob);
                let next_blob = blob | self.g.neighbors(w);
                if self.grow(class | (1 << w), next_ext, next_blob, allowed, budget, used, anchor) {
                    return true;
                }
            }
        }
        false
    }

    /// Coverage test for the completed family: the placed classes plus a
    /// singleton class for every unused vertex.
    fn family_covers(&self, used: u64) -> bool {
        let g = self.g;
        let class_masks = self.classes.iter().map(|&c| c | g.set_neighbors(c));
        let mut singles = g.vertex_mask() & !used;
        let single_masks = std::iter::from_fn(move || {
            if singles == 0 {
                return None;
            }
            let v = singles.trailing_zeros() as usize;
            singles &= singles - 1;
            Some(g.closed_neighbors(v))
        });
        coloring::first_unserved(g, class_masks.chain(single_masks)).is_none()
    }
}

/// Dense coloring from a family of disjoint classes: ids assigned in
/// first-encounter vertex order, unused vertices become singletons.
fn coloring_from_classes(n: usize, classes: &[u64]) -> VertexColoring {
    let mut ids = vec![u32::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if ids[v] != u32::MAX {
            continue;
        }
        let members = classes
            .iter()
            .copied()
            .find(|&c| c & (1 << v) != 0)
            .unwrap_or(1 << v);
        let mut rest = members;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            ids[u] = next;
            rest &= rest - 1;
        }
        next += 1;
    }
    VertexColoring::new(ids).expect("n >= 1")
}

/// Brute-force reference value: maximize the color count over *all* set
/// partitions of the vertices, using only the public MVC predicate.
pub fn mvc_oracle(g: &Graph) -> Result<u32, SolverError> {
    let n = g.n();
    if n > ORACLE_MAX {
        return Err(SolverError::TooLarge { n, cap: ORACLE_MAX });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let mut rgs = vec![0u32; n];
    let mut best = 0;
    loop {
        let f = VertexColoring::new(rgs.clone()).expect("n >= 1");
        let k = f.color_count();
        if k > best && coloring::is_mvc_coloring(g, &f).expect("lengths match") {
            best = k;
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(best)
}

/// Advance a restricted growth string in place; false when exhausted.
/// Enumerates every set partition of {0, ..., n-1} exactly once.
fn next_rgs(a: &mut [u32]) -> bool {
    let n = a.len();
    for i in (1..n).rev() {
        let prefix_max = a[..i].iter().copied().max().expect("i >= 1");
        if a[i] <= prefix_max {
            a[i] += 1;
            for slot in &mut a[i + 1..] {
                *slot = 0;
            }
            return true;
        }
    }
    false
}
