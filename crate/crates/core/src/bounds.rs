//! Bounds on mvc(G) that don't require the exact solver, plus the
//! diameter/size trade-off formula used to certify them.
//!
//! Lower bound: any spanning tree T gives mvc(G) >= ℓ(T) + 1 via the leafy
//! coloring (one color on the internal vertices, leaves distinct), so the
//! best tree to use is one with the most leaves. Upper bound: a shortest
//! path between a diametral pair must be vertex-monochromatic in the
//! interior, which pins n - d + 2 as soon as d >= 3.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph};

/// Exhaustive max-leaf search is a 2^n scan; keep it instant.
pub const EXACT_LEAF_MAX: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bounds are defined for connected graphs; this graph is disconnected")]
    Disconnected,
}

/// A spanning tree presented by its edge list, with its leaf count and a
/// flag telling whether the leaf count is provably maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeWitness {
    pub edges: Vec<(usize, usize)>,
    pub leaf_count: u32,
    /// True when found by exhaustive search (n <= EXACT_LEAF_MAX); false
    /// means a greedy-expansion heuristic, so `leaf_count` is only a lower
    /// bound on ℓ(G).
    pub exact: bool,
}

impl TreeWitness {
    /// The tree as a graph on the same vertex set.
    pub fn to_graph(&self, n: usize) -> Graph {
        Graph::from_edges(n, &self.edges).expect("witness edges are valid")
    }
}

/// Spanning tree maximizing the number of leaves; exact up to
/// [`EXACT_LEAF_MAX`] vertices, greedy beyond.
///
/// The exact search scans connected dominating sets: for n >= 3 the internal
/// vertices of any spanning tree form one, and conversely every connected
/// dominating set D extends to a spanning tree whose non-D vertices are all
/// leaves, so max leaves = n - min |D|.
pub fn max_leaf_spanning_tree(g: &Graph) -> Result<TreeWitness, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(TreeWitness {
            edges: Vec::new(),
            leaf_count: 0,
            exact: true,
        });
    }
    if n > EXACT_LEAF_MAX {
        return Ok(greedy_leafy_tree(g));
    }
    let full = g.vertex_mask();
    let mut best: Option<u64> = None;
    for mask in 1..=full {
        if let Some(b) = best {
            if mask.count_ones() >= b.count_ones() {
                continue;
            }
        }
        if (mask | g.set_neighbors(mask)) == full && g.is_connected_subset(mask) {
            best = Some(mask);
        }
    }
    let dominators = best.expect("a connected graph dominates itself");
    let edges = tree_from_dominators(g, dominators);
    let leaf_count = leaf_count(n, &edges);
    if n >= 3 {
        debug_assert_eq!(leaf_count, (n as u32) - dominators.count_ones());
    }
    Ok(TreeWitness {
        edges,
        leaf_count,
        exact: true,
    })
}

/// Spanning tree over `dominators` (BFS inside the induced subgraph) with
/// every other vertex attached as a leaf to its lowest-indexed dominator.
fn tree_from_dominators(g: &Graph, dominators: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(g.n() - 1);
    let root = dominators.trailing_zeros() as usize;
    let mut visited = 1u64 << root;
    let mut queue = vec![root];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in bits(g.neighbors(u) & dominators & !visited) {
            visited |= 1 << v;
            edges.push((u.min(v), u.max(v)));
            queue.push(v);
        }
    }
    debug_assert_eq!(visited, dominators);
    for v in bits(g.vertex_mask() & !dominators) {
        let u = (g.neighbors(v) & dominators).trailing_zeros() as usize;
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges
}

fn leaf_count(n: usize, edges: &[(usize, usize)]) -> u32 {
    let mut deg = vec![0u32; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().filter(|&&d| d == 1).count() as u32
}

/// Greedy expansion: root at a max-degree vertex, then repeatedly let the
/// tree vertex with the most outside neighbors adopt all of them.
fn greedy_leafy_tree(g: &Graph) -> TreeWitness {
    let n = g.n();
    let root = (0..n)
        .min_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v))
        .expect("n >= 1");
    let mut in_tree = 1u64 << root;
    let mut edges = Vec::with_capacity(n - 1);
    while in_tree != g.vertex_mask() {
        let u = bits(in_tree)
            .min_by_key(|&u| {
                (
                    std::cmp::Reverse((g.neighbors(u) & !in_tree).count_ones()),
                    u,
                )
            })
            .expect("tree is nonempty");
        let fresh = g.neighbors(u) & !in_tree;
        debug_assert!(fresh != 0, "connected graph always offers an expansion");
        for v in bits(fresh) {
            edges.push((u.min(v), u.max(v)));
        }
        in_tree |= fresh;
    }
    edges.sort_unstable();
    let leaves = leaf_count(n, &edges);
    TreeWitness {
        edges,
        leaf_count: leaves,
        exact: false,
    }
}

/// mvc(G) >= the color count of the leafy coloring on a max-leaf spanning
/// tree. That count is ℓ(T) + 1 for n >= 3, and simply n for n <= 2 (a
/// 2-vertex tree has no internal vertex, so both leaves keep their colors).
pub fn lower_bound_spanning_tree(g: &Graph) -> Result<u32, BoundsError> {
    let tree = max_leaf_spanning_tree(g)?;
    Ok(tree_coloring_count(g, &tree))
}

fn tree_coloring_count(g: &Graph, tree: &TreeWitness) -> u32 {
    let n = g.n();
    if n == 1 {
        return 1;
    }
    crate::coloring::spanning_tree_coloring(g, &tree.to_graph(n))
        .expect("max-leaf witness is a spanning tree")
        .color_count()
}

/// Exact rational value of a lower bound, together with its ceiling (the
/// integer form actually compared against mvc).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RationalBound {
    pub numer: i64,
    pub denom: i64,
    pub ceil: i64,
}

impl RationalBound {
    fn from_ratio(r: Ratio<i64>) -> RationalBound {
        RationalBound {
            numer: *r.numer(),
            denom: *r.denom(),
            ceil: r.ceil().to_integer(),
        }
    }
}

impl std::fmt::Display for RationalBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Minimum-degree lower bound ladder: δ >= 5 gives n/2 + 3, δ = 4 gives
/// 2n/5 + 13/5, δ = 3 gives n/4 + 3; nothing is claimed below δ = 3. The
/// clauses are ordered strongest first, so the first applicable one is best.
pub fn min_degree_lower_bound(n: usize, min_degree: usize) -> Option<RationalBound> {
    let n = n as i64;
    let bound = if min_degree >= 5 {
        Ratio::new(n, 2) + Ratio::from_integer(3)
    } else if min_degree == 4 {
        Ratio::new(2 * n, 5) + Ratio::new(13, 5)
    } else if min_degree == 3 {
        Ratio::new(n, 4) + Ratio::from_integer(3)
    } else {
        return None;
    };
    Some(RationalBound::from_ratio(bound))
}

/// mvc(G) <= n when diam(G) <= 2, else n - diam(G) + 2: the interior of a
/// diametral shortest path must collapse into one color class.
pub fn diameter_upper_bound(g: &Graph) -> Result<u32, BoundsError> {
    let d = g.diameter().ok_or(BoundsError::Disconnected)?;
    let n = g.n() as u32;
    Ok(if d <= 2 { n } else { n - d + 2 })
}

/// mvc of the n-cycle: n for n <= 5 (diameter <= 2), 3 afterwards.
/// `None` below n = 3.
pub fn cycle_mvc(n: usize) -> Option<u32> {
    if n < 3 {
        return None;
    }
    Some(if n <= 5 { n as u32 } else { 3 })
}

/// Largest diameter over connected graphs with `n` vertices and `m` edges;
/// `None` outside the connected range n - 1 <= m <= C(n, 2).
///
/// With p = m - n + 1 extra edges over a tree, the maximum is
/// (n - 1) - x(p) + y(p), where x(p) is the least x >= 1 with C(x, 2) >= p
/// and y(p) is 1 when p is itself a binomial coefficient C(t, 2), else 2.
pub fn max_diameter(n: usize, m: usize) -> Option<u32> {
    if n == 0 || n > crate::MAX_VERTICES {
        return None;
    }
    let pairs = n * (n - 1) / 2;
    if m + 1 < n || m > pairs {
        return None;
    }
    if n == 1 {
        return Some(0);
    }
    let p = m - (n - 1);
    let mut x = 1;
    while x * (x - 1) / 2 < p {
        x += 1;
    }
    let y = if is_triangular(p) { 1 } else { 2 };
    Some((n - 1 - x + y) as u32)
}

fn is_triangular(p: usize) -> bool {
    let mut t = 0;
    while t * (t + 1) / 2 < p {
        t += 1;
    }
    t * (t + 1) / 2 == p
}

/// Everything the `bounds` CLI subcommand reports for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: u32,
    pub spanning_tree_lower: u32,
    pub tree: TreeWitness,
    pub diameter_upper: u32,
    pub min_degree_bound: Option<RationalBound>,
    /// Exact mvc when the caller computed it (graph within the solver cap).
    pub exact: Option<u32>,
}

pub fn bounds_report(g: &Graph, exact: Option<u32>) -> Result<BoundsReport, BoundsError> {
    let (min_degree, max_degree, m) = g.degree_stats();
    let diameter = g.diameter().ok_or(BoundsError::Disconnected)?;
    let tree = max_leaf_spanning_tree(g)?;
    let spanning_tree_lower = tree_coloring_count(g, &tree);
    Ok(BoundsReport {
        n: g.n(),
        m,
        min_degree,
        max_degree,
        diameter,
        spanning_tree_lower,
        tree,
        diameter_upper: diameter_upper_bound(g)?,
        min_degree_bound: min_degree_lower_bound(g.n(), min_degree),
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{construct, Family};
    use crate::solver::mvc_exact;
    use crate::testutil::{cube3, petersen};

    fn family(f: Family) -> Graph {
        construct(&f).unwrap()
    }

    /// Reference maximizer: try every (n-1)-subset of the edges.
    fn brute_max_leaves(g: &Graph) -> u32 {
        let edges = g.edges();
        let n = g.n();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let chosen: Vec<_> = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let t = Graph::from_edges(n, &chosen).unwrap();
            if t.is_connected() {
                best = best.max(leaf_count(n, &chosen));
            }
        }
        best
    }

    #[test]
    fn max_leaf_frozen_values() {
        let cases = [
            (family(Family::Complete { n: 4 }), 3),
            (family(Family::Cycle { n: 6 }), 2),
            (family(Family::Path { n: 7 }), 2),
            (family(Family::Star { n: 8 }), 7),
            (family(Family::DoubleStar { a: 3, b: 3 }), 6),
            (cube3(), 4),
            (petersen(), 6),
        ];
        for (g, want) in cases {
            let t = max_leaf_spanning_tree(&g).unwrap();
            assert!(t.exact);
            assert_eq!(t.leaf_count, want, "{g:?}");
            // The witness really is a spanning tree of g.
            let tg = t.to_graph(g.n());
            assert_eq!(tg.m(), g.n() - 1);
            assert!(tg.is_connected());
            for (u, v) in tg.edges() {
                assert!(g.has_edge(u, v));
            }
            assert_eq!(leaf_count(g.n(), &t.edges), want);
        }
    }

    #[test]
    fn max_leaf_matches_spanning_tree_brute_force() {
        for g in [
            cube3(),
            family(Family::Cycle { n: 6 }),
            family(Family::Complete { n: 5 }),
            family(Family::CliquePendantPath { n: 7, d: 4 }),
        ] {
            assert_eq!(
                max_leaf_spanning_tree(&g).unwrap().leaf_count,
                brute_max_leaves(&g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn tiny_graphs() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        let t = max_leaf_spanning_tree(&k1).unwrap();
        assert_eq!((t.leaf_count, t.edges.len()), (0, 0));
        assert_eq!(lower_bound_spanning_tree(&k1).unwrap(), 1);

        let k2 = family(Family::Path { n: 2 });
        let t = max_leaf_spanning_tree(&k2).unwrap();
        assert_eq!(t.leaf_count, 2);
        // Both vertices are leaves, there is no internal color: the leafy
        // coloring has 2 colors, not ℓ + 1 = 3. mvc(K_2) = 2.
        assert_eq!(lower_bound_spanning_tree(&k2).unwrap(), 2);
    }

    #[test]
    fn greedy_kicks_in_above_the_exact_cap() {
        let g = family(Family::Path { n: 12 });
        let t = max_leaf_spanning_tree(&g).unwrap();
        assert!(!t.exact);
        assert_eq!(t.leaf_count, 2);
        assert_eq!(t.edges.len(), 11);

        let s = family(Family::Star { n: 13 });
        let t = max_leaf_spanning_tree(&s).unwrap();
        assert_eq!(t.leaf_count, 12);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            max_leaf_spanning_tree(&g).unwrap_err(),
            BoundsError::Disconnected
        );
        assert_eq!(diameter_upper_bound(&g).unwrap_err(), BoundsError::Disconnected);
    }

    #[test]
    fn lower_bound_frozen_values() {
        assert_eq!(lower_bound_spanning_tree(&family(Family::Path { n: 6 })).unwrap(), 3);
        assert_eq!(lower_bound_spanning_tree(&family(Family::Star { n: 7 })).unwrap(), 7);
        assert_eq!(lower_bound_spanning_tree(&family(Family::Cycle { n: 6 })).unwrap(), 3);
        assert_eq!(lower_bound_spanning_tree(&petersen()).unwrap(), 7);
    }

    #[test]
    fn min_degree_ladder_frozen_values() {
        assert_eq!(min_degree_lower_bound(20, 2), None);
        assert_eq!(min_degree_lower_bound(20, 0), None);
        let b = min_degree_lower_bound(20, 3).unwrap();
        assert_eq!((b.numer, b.denom, b.ceil), (8, 1, 8));
        let b = min_degree_lower_bound(20, 4).unwrap();
        assert_eq!((b.numer, b.denom, b.ceil), (53, 5, 11));
        assert_eq!(b.to_string(), "53/5");
        let b = min_degree_lower_bound(20, 5).unwrap();
        assert_eq!((b.numer, b.denom, b.ceil), (13, 1, 13));
        // Higher degrees use the δ >= 5 clause.
        let b = min_degree_lower_bound(20, 9).unwrap();
        assert_eq!(b.ceil, 13);
        let b = min_degree_lower_bound(7, 5).unwrap();
        assert_eq!((b.numer, b.denom, b.ceil), (13, 2, 7));
    }

    #[test]
    fn diameter_upper_frozen_values() {
        assert_eq!(diameter_upper_bound(&family(Family::Path { n: 6 })).unwrap(), 3);
        assert_eq!(diameter_upper_bound(&family(Family::Cycle { n: 5 })).unwrap(), 5);
        assert_eq!(diameter_upper_bound(&petersen()).unwrap(), 10);
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(diameter_upper_bound(&k1).unwrap(), 1);
    }

    #[test]
    fn cycle_closed_form() {
        assert_eq!(cycle_mvc(2), None);
        assert_eq!(cycle_mvc(3), Some(3));
        assert_eq!(cycle_mvc(4), Some(4));
        assert_eq!(cycle_mvc(5), Some(5));
        for n in 6..=20 {
            assert_eq!(cycle_mvc(n), Some(3), "n={n}");
        }
    }

    #[test]
    fn max_diameter_frozen_values() {
        for n in 2..=8 {
            assert_eq!(max_diameter(n, n - 1), Some(n as u32 - 1), "tree n={n}");
        }
        assert_eq!(max_diameter(6, 6), Some(4));
        assert_eq!(max_diameter(10, 12), Some(7));
        assert_eq!(max_diameter(4, 5), Some(2));
        assert_eq!(max_diameter(5, 10), Some(1));
        assert_eq!(max_diameter(1, 0), Some(0));
        assert_eq!(max_diameter(5, 3), None);
        assert_eq!(max_diameter(5, 11), None);
    }

    #[test]
    fn max_diameter_is_attained_and_never_exceeded() {
        use std::collections::BTreeMap;
        for n in 2..=6 {
            let mut seen: BTreeMap<usize, u32> = BTreeMap::new();
            for g in crate::enumerate::enumerate_connected(n, None).unwrap() {
                let d = g.diameter().unwrap();
                let cap = max_diameter(n, g.m()).unwrap();
                assert!(d <= cap, "n={n} m={} d={d} cap={cap}", g.m());
                let e = seen.entry(g.m()).or_insert(0);
                *e = (*e).max(d);
            }
            for (m, best) in seen {
                assert_eq!(best, max_diameter(n, m).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sandwich_holds_on_all_small_graphs() {
        for n in 1..=6 {
            for g in crate::enumerate::enumerate_connected(n, None).unwrap() {
                let lo = lower_bound_spanning_tree(&g).unwrap();
                let hi = diameter_upper_bound(&g).unwrap();
                let exact = mvc_exact(&g).unwrap().value;
                assert!(
                    lo <= exact && exact <= hi,
                    "n={n} edges={:?} lo={lo} exact={exact} hi={hi}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn report_contains_consistent_fields() {
        let g = family(Family::Path { n: 6 });
        let r = bounds_report(&g, Some(3)).unwrap();
        assert_eq!((r.n, r.m), (6, 5));
        assert_eq!((r.min_degree, r.max_degree), (1, 2));
        assert_eq!(r.diameter, 5);
        assert_eq!(r.spanning_tree_lower, 3);
        assert_eq!(r.diameter_upper, 3);
        assert_eq!(r.min_degree_bound, None);
        assert_eq!(r.exact, Some(3));
        assert_eq!(r.tree.leaf_count + 1, r.spanning_tree_lower);
    }
}
