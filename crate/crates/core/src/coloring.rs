//! Vertex colorings and the MVC property.
//!
//! A coloring is an MVC-coloring when every vertex pair is joined by a path
//! whose internal vertices all share one color. The check used everywhere
//! below rests on one observation: the internal vertices of such a path form
//! a connected monochromatic set, and the endpoints attach to it by single
//! edges. So a pair {u,v} is served iff u and v are adjacent, or some
//! connected component S of some color class has both u and v in S ∪ N(S).
//! Singleton classes serve the length-2 paths through a common neighbor.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("cannot parse color id {0:?}")]
    BadColorToken(String),
    #[error("coloring is empty")]
    EmptyColoring,
    #[error("input coloring is not an MVC-coloring: pair ({0}, {1}) has no vertex-monochromatic path")]
    NotMvc(usize, usize),
    #[error("tree has {found} vertices, graph has {expected}")]
    TreeWrongOrder { expected: usize, found: usize },
    #[error("claimed tree is not a tree (needs n-1 edges and connectivity)")]
    NotATree,
    #[error("tree edge ({0}, {1}) is not an edge of the graph")]
    TreeNotSubgraph(usize, usize),
    #[error("spanning-tree coloring needs at least 2 vertices")]
    TreeTooSmall,
}

/// Assignment of one color id per vertex. Ids are opaque; only the induced
/// partition matters to every predicate here.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexColoring {
    colors: Vec<u32>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u32>) -> Result<VertexColoring, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::EmptyColoring);
        }
        Ok(VertexColoring { colors })
    }

    /// Every vertex its own color: 0, 1, ..., n-1.
    pub fn distinct(n: usize) -> VertexColoring {
        VertexColoring {
            colors: (0..n as u32).collect(),
        }
    }

    /// Parse the CLI text form: comma-separated color ids, e.g. `"0,1,1,2"`.
    pub fn parse(text: &str) -> Result<VertexColoring, ColoringError> {
        let colors = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| ColoringError::BadColorToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        VertexColoring::new(colors)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> u32 {
        let mut sorted = self.colors.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() as u32
    }

    /// Vertex masks per color, sorted by color id.
    pub fn class_masks(&self) -> Vec<(u32, u64)> {
        let mut out: Vec<(u32, u64)> = Vec::new();
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        for c in seen {
            let mut mask = 0u64;
            for (v, &cv) in self.colors.iter().enumerate() {
                if cv == c {
                    mask |= 1 << v;
                }
            }
            out.push((c, mask));
        }
        out
    }

    /// Same partition with dense ids 0..k-1 in first-occurrence order.
    pub fn renumbered(&self) -> VertexColoring {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let mut colors = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let id = match map.iter().find(|&&(old, _)| old == c) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as u32;
                    map.push((c, new));
                    new
                }
            };
            colors.push(id);
        }
        VertexColoring { colors }
    }
}

impl fmt::Display for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexColoring({self})")
    }
}

/// Waste bookkeeping: a class of t >= 2 vertices "wastes" t-1 colors, so the
/// color count k and total waste w always satisfy k + w = n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WasteAccount {
    /// `(color, class size, waste)` for each nontrivial class.
    pub nontrivial: Vec<(u32, u32, u32)>,
    pub total: u32,
    pub colors: u32,
}

pub fn waste(f: &VertexColoring) -> WasteAccount {
    let mut nontrivial = Vec::new();
    let mut total = 0;
    let classes = f.class_masks();
    for &(c, mask) in &classes {
        let size = mask.count_ones();
        if size >= 2 {
            nontrivial.push((c, size, size - 1));
            total += size - 1;
        }
    }
    let colors = classes.len() as u32;
    debug_assert_eq!(colors + total, f.len() as u32);
    WasteAccount {
        nontrivial,
        total,
        colors,
    }
}

/// Core of the MVC check: given the serving masks S ∪ N(S) of every color
/// component, find the first (lexicographic) vertex pair that is neither
/// adjacent nor co-resident in some mask. `None` means the coloring serves
/// every pair.
pub(crate) fn first_unserved(g: &Graph, masks: impl Iterator<Item = u64>) -> Option<(usize, usize)> {
    let n = g.n();
    let full = g.vertex_mask();
    let mut served: Vec<u64> = (0..n).map(|u| g.closed_neighbors(u)).collect();
    for mask in masks {
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            served[u] |= mask;
            rest &= rest - 1;
        }
    }
    for (u, &row) in served.iter().enumerate() {
        if row != full {
            let v = (!row & full).trailing_zeros() as usize;
            // Serving is symmetric, so the first gap scanning upward has v > u.
            debug_assert!(v > u);
            return Some((u, v));
        }
    }
    None
}

/// Serving masks of a coloring: one `S ∪ N(S)` per connected component `S` of
/// each color class (singleton classes yield closed neighborhoods).
fn component_masks(g: &Graph, f: &VertexColoring) -> Vec<u64> {
    let mut out = Vec::new();
    for (_, class) in f.class_masks() {
        let mut rest = class;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = g.reachable_within(start, class);
            rest &= !comp;
            out.push(comp | g.set_neighbors(comp));
        }
    }
    out
}

/// First vertex pair not joined by any vertex-monochromatic path, or `None`
/// if `f` is an MVC-coloring of `g`.
pub fn unserved_pair(g: &Graph, f: &VertexColoring) -> Result<Option<(usize, usize)>, ColoringError> {
    if f.len() != g.n() {
        return Err(ColoringError::LengthMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    Ok(first_unserved(g, component_masks(g, f).into_iter()))
}

/// Whether `f` is an MVC-coloring of `g`.
pub fn is_mvc_coloring(g: &Graph, f: &VertexColoring) -> Result<bool, ColoringError> {
    Ok(unserved_pair(g, f)?.is_none())
}

/// The classical leafy-tree coloring: all non-leaves of a spanning tree share
/// one color, every leaf gets its own. Uses ℓ(T)+1 colors whenever the tree
/// has a non-leaf (any tree on >= 3 vertices), and is always an MVC-coloring
/// of any graph the tree spans.
pub fn spanning_tree_coloring(g: &Graph, tree: &Graph) -> Result<VertexColoring, ColoringError> {
    let n = g.n();
    if tree.n() != n {
        return Err(ColoringError::TreeWrongOrder {
            expected: n,
            found: tree.n(),
        });
    }
    if n < 2 {
        return Err(ColoringError::TreeTooSmall);
    }
    if tree.m() != n - 1 || !tree.is_connected() {
        return Err(ColoringError::NotATree);
    }
    for (u, v) in tree.edges() {
        if !g.has_edge(u, v) {
            return Err(ColoringError::TreeNotSubgraph(u, v));
        }
    }
    let any_internal = (0..n).any(|v| tree.degree(v) >= 2);
    let mut colors = vec![0u32; n];
    let mut next = u32::from(any_internal);
    for v in 0..n {
        if tree.degree(v) == 1 && any_internal {
            colors[v] = next;
            next += 1;
        } else if !any_internal {
            // A 2-vertex tree has no internal vertices; every vertex is a leaf
            // with its own color.
            colors[v] = v as u32;
        }
    }
    let f = VertexColoring { colors };
    debug_assert_eq!(unserved_pair(g, &f), Ok(None));
    Ok(f)
}

/// Split every disconnected color class into one fresh color per component.
/// Requires an MVC-coloring and returns one; the color count never drops
/// (recoloring a component does not remove any serving component).
pub fn normalize_connected_classes(
    g: &Graph,
    f: &VertexColoring,
) -> Result<VertexColoring, ColoringError> {
    if let Some((u, v)) = unserved_pair(g, f)? {
        return Err(ColoringError::NotMvc(u, v));
    }
    let n = g.n();
    // Component id per vertex, in first-encounter order over vertices.
    let mut colors = vec![u32::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if colors[v] != u32::MAX {
            continue;
        }
        let class = f
            .class_masks()
            .iter()
            .find(|&&(c, _)| c == f.color(v))
            .map(|&(_, mask)| mask)
            .expect("vertex color present in class list");
        let comp = g.reachable_within(v, class);
        let mut rest = comp;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            colors[u] = next;
            rest &= rest - 1;
        }
        next += 1;
    }
    let out = VertexColoring { colors };
    debug_assert_eq!(unserved_pair(g, &out), Ok(None));
    debug_assert!(out.color_count() >= f.color_count());
    Ok(out)
}
