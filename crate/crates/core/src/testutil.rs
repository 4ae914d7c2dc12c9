//! Shared constructions for unit tests.

use crate::graph::Graph;

/// Petersen graph as the Kneser graph K(5,2): vertices are the 2-subsets of
/// {0..4}, adjacent iff disjoint. Built from the definition so tests do not
/// depend on any family constructor.
pub(crate) fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            pairs.push((i, j));
        }
    }
    let mut edges = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            if i != k && i != l && j != k && j != l {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// 3-cube: vertices are the 3-bit strings, adjacent iff they differ in one bit.
pub(crate) fn cube3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}
