//! Immutable simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitrow per vertex, so neighborhood
//! operations are single machine-word operations. Everything downstream
//! (coloring checks, the solver, enumeration) works on these bitrows.

use std::fmt;

use thiserror::Error;

/// Hard vertex cap imposed by the one-word-per-row representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph has {0} vertices, maximum supported is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
}

///// Bitmask with the low `n` bits set: the full vertex set.
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_VERTICES);
    if n == MAX_VERTICES {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Set bit positions of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Immutable simple graph. `adj[u]` has bit `v` set iff `uv` is an edge.
///
/// Invariants (enforced at construction): symmetric, irreflexive,
/// `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph on `n` vertices with the given undirected edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count: half the total popcount of the rows.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Open neighborhood of `u` as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Closed neighborhood `{u} ∪ N(u)` as a bitmask.
    pub fn closed_neighbors(&self, u: usize) -> u64 {
        self.adj[u] | (1 << u)
    }

    /// Union of open neighborhoods over the vertices of `set`.
    pub fn set_neighbors(&self, set: u64) -> u64 {
        let mut out = 0;
        for v in bits(set) {
            out |= self.adj[v];
        }
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// `(δ, Δ, m)`: minimum degree, maximum degree, edge count.
    pub fn degree_stats(&self) -> (usize, usize, usize) {
        let mut min = usize::MAX;
        let mut max = 0;
        let mut total = 0;
        for row in &self.adj {
            let d = row.count_ones() as usize;
            min = min.min(d);
            max = max.max(d);
            total += d;
        }
        (min, max, total / 2)
    }

    pub fn min_degree(&self) -> usize {
        self.degree_stats().0
    }

    /// All vertices as a bitmask.
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// New graph with edge `uv` added (no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Complement: edge `uv` in the result iff `u != v` and `uv` not in `self`.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & mask & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Graph with vertex `i` playing the role of `perm[i]` in `self`:
    /// result has edge `ij` iff `self` has edge `perm[i] perm[j]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![0u64; self.n];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph { n: self.n, adj }
    }

    /// Set of vertices reachable from `start`, as a bitmask (BFS).
    pub fn reachable_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertices of `within` reachable from `start` using only vertices of
    /// `within` (BFS restricted to the induced subgraph).
    pub(crate) fn reachable_within(&self, start: usize, within: u64) -> u64 {
        debug_assert!(within & (1 << start) != 0);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v] & within;
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0) == self.vertex_mask()
    }

    /// Whether the subgraph induced by `mask` is connected (empty and
    /// singleton masks count as connected).
    pub(crate) fn is_connected_subset(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.reachable_within(start, mask) == mask
    }

    /// BFS hop distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                dist[v] = Some(level);
                f &= f - 1;
            }
        }
        dist
    }

    /// All-pairs hop distances.
    pub fn distances(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            d.extend(self.bfs_distances(u));
        }
        DistanceMatrix { n: self.n, d }
    }

    /// Largest hop distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        self.distances().diameter()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All-pairs hop distances; unreachable pairs carry no number.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    /// Max distance from `u`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, u: usize) -> Option<u32> {
        let mut ecc = 0;
        for v in 0..self.n {
            ecc = ecc.max(self.get(u, v)?);
        }
        Some(ecc)
    }

    /// Max over all pairs, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut diam = 0;
        for u in 0..self.n {
            diam = diam.max(self.eccentricity(u)?);
        }
        Some(diam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{construct, Family};
    use crate::testutil::petersen;

    fn path(n: usize) -> Graph {
        construct(&Family::Path { n }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        construct(&Family::Cycle { n }).unwrap()
    }

    fn complete(n: usize) -> Graph {
        construct(&Family::Complete { n }).unwrap()
    }

    fn star(n: usize) -> Graph {
        construct(&Family::Star { n }).unwrap()
    }

    /// Graph on `n` vertices whose edge set is the bits of `mask` in
    /// column-major upper-triangle order (the same order graph6 uses).
    fn from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Independent distance oracle: Floyd–Warshall over the edge list.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
        const INF: u64 = u64::MAX / 4;
        let n = g.n();
        let mut d = vec![vec![INF; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for (u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    #[test]
    fn construction_validates_input() {
        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::Empty);
        assert_eq!(
            Graph::empty(65).unwrap_err(),
            GraphError::TooManyVertices(65)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn degree_stats_match_known_graphs() {
        assert_eq!(cycle(6).degree_stats(), (2, 2, 6));
        assert_eq!(star(5).degree_stats(), (1, 4, 4));
        assert_eq!(complete(4).degree_stats(), (3, 3, 6));
    }

    #[test]
    fn edges_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 1), (2, 4)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3), (2, 4)]);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn diameter_of_known_graphs() {
        assert_eq!(path(4).diameter(), Some(3));
        assert_eq!(complete(5).diameter(), Some(1));
        assert_eq!(complete(1).diameter(), Some(0));
        assert_eq!(petersen().diameter(), Some(2));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), None, "disconnected has no diameter");
    }

    #[test]
    fn connectivity() {
        assert!(path(6).is_connected());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        for n in 1..=8 {
            let c = complete(n).complement();
            assert_eq!(c.m(), 0);
        }
    }

    #[test]
    fn bfs_matches_floyd_warshall_on_all_labeled_graphs_up_to_5() {
        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0..(1u64 << bits) {
                let g = from_mask(n, mask);
                let dm = g.distances();
                let fw = floyd_warshall(&g);
                for u in 0..n {
                    for v in 0..n {
                        let expect = if fw[u][v] >= u64::MAX / 4 {
                            None
                        } else {
                            Some(fw[u][v] as u32)
                        };
                        assert_eq!(dm.get(u, v), expect, "n={n} mask={mask} pair=({u},{v})");
                    }
                }
            }
        }
    }

    #[test]
    fn complement_is_involution_on_all_labeled_graphs_up_to_5() {
        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0..(1u64 << bits) {
                let g = from_mask(n, mask);
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn distance_matrix_invariants_hold_exhaustively_at_n4() {
        for mask in 0..(1u64 << 6) {
            let g = from_mask(4, mask);
            let dm = g.distances();
            for u in 0..4 {
                assert_eq!(dm.get(u, u), Some(0));
                for v in 0..4 {
                    assert_eq!(dm.get(u, v), dm.get(v, u));
                    for w in 0..4 {
                        if let (Some(a), Some(b), Some(c)) =
                            (dm.get(u, v), dm.get(u, w), dm.get(w, v))
                        {
                            assert!(a <= b + c, "triangle inequality");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn relabeling_preserves_structure() {
        let g = path(4);
        let h = g.relabeled(&[3, 2, 1, 0]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let s = star(4);
        let t = s.relabeled(&[1, 0, 2, 3]);
        assert_eq!(t.degree(1), 3, "center moved to index 1");
    }

    #[test]
    fn with_edge_adds_one_edge() {
        let g = path(4);
        let h = g.with_edge(0, 3).unwrap();
        assert_eq!(h.m(), g.m() + 1);
        assert_eq!(h.diameter(), Some(2));
        assert_eq!(g.with_edge(0, 0).unwrap_err(), GraphError::SelfLoop(0));
    }
}
