//! Exact computation and exhaustive verification of the monochromatic
//! vertex-connection number mvc(G) for small graphs.
//!
//! A vertex coloring is an MVC-coloring when every pair of vertices is joined
//! by a path whose internal vertices all share one color; mvc(G) is the
//! maximum number of colors over all MVC-colorings. The crate provides:
//!
//! - [`graph`]: bitset graphs (n <= 64), distances, graph6 I/O ([`graph6`]);
//! - [`enumerate`]: canonical labels and exhaustive connected-graph
//!   enumeration up to n = 8, plus graph6 corpus ingestion;
//! - [`coloring`]: MVC-coloring checks, waste accounting, the classical
//!   spanning-tree coloring;
//! - [`solver`]: exact mvc via waste-budget iterative deepening, plus an
//!   independent set-partition oracle;
//! - [`bounds`]: closed-form lower/upper bounds (leafy trees, minimum degree,
//!   diameter, cycles, max diameter for given n and m);
//! - [`extremal`]: the extremal families and Erdos-Gallai-type thresholds,
//!   with exhaustive verification;
//! - [`nordhaus`]: complement-pair sums and their bounds;
//! - [`checks`]: the claim-by-claim verification harness behind the CLI.

pub mod bounds;
pub mod checks;
pub mod coloring;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod nordhaus;
pub mod solver;

#[cfg(test)]
pub(crate) mod testutil;

pub use graph::{DistanceMatrix, Graph, GraphError, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
