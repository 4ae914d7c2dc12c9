//! Python extension module for the `mvc` crate.
//!
//! Exposes the bitset graph type plus the main operations — the exact
//! solver and its set-partition oracle, coloring verification, bounds,
//! family constructions, threshold closed forms, complement-pair sums,
//! the exhaustive enumeration, and the claim checks. Structured reports
//! cross the boundary as JSON strings; scalars and graphs as native
//! types. Errors become ValueError with the library's message text.

use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mvc::bounds::{bounds_report, max_leaf_spanning_tree};
use mvc::checks::run_check;
use mvc::coloring::{unserved_pair, VertexColoring};
use mvc::enumerate;
use mvc::extremal::{self, Family};
use mvc::nordhaus;
use mvc::solver;
use mvc::{parse_graph6, write_graph6};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json(value: &impl serde::Serialize) -> PyResult<String> {
    serde_json::to_string(value).map_err(value_err)
}

/// An undirected graph on at most 64 vertices, adjacency kept as bitsets.
/// Only borrowed (never cloned) when passed back into this module.
#[pyclass(frozen, skip_from_py_object)]
struct Graph {
    inner: mvc::Graph,
}

#[pymethods]
impl Graph {
    /// Build a graph from a vertex count and an edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = mvc::Graph::from_edges(n, &edges).map_err(value_err)?;
        Ok(Self { inner })
    }

    /// Decode one graph6 record.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = parse_graph6(text).map_err(value_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Largest hop distance, or None when disconnected.
    fn diameter(&self) -> Option<u32> {
        self.inner.diameter()
    }

    fn complement(&self) -> Self {
        Self {
            inner: self.inner.complement(),
        }
    }

    /// A copy with one extra edge.
    fn with_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        let inner = self.inner.with_edge(u, v).map_err(value_err)?;
        Ok(Self { inner })
    }

    fn graph6(&self) -> String {
        write_graph6(&self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={}, graph6={:?})", self.n(), self.m(), self.graph6())
    }
}

/// Outcome of one exact solve: the value, an optimal coloring as
/// comma-separated color ids, plus search effort counters.
#[pyclass(frozen)]
struct SolveResult {
    #[pyo3(get)]
    value: u32,
    #[pyo3(get)]
    witness: String,
    #[pyo3(get)]
    nodes: u64,
    #[pyo3(get)]
    budget: u32,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(value={}, witness={:?}, nodes={}, budget={})",
            self.value, self.witness, self.nodes, self.budget
        )
    }
}

/// Exact mvc(G) for a connected graph with at most 12 vertices.
#[pyfunction]
fn mvc_exact(g: &Graph) -> PyResult<SolveResult> {
    let r = solver::mvc_exact(&g.inner).map_err(value_err)?;
    Ok(SolveResult {
        value: r.value,
        witness: r.witness.to_string(),
        nodes: r.nodes,
        budget: r.budget,
    })
}

/// Brute-force reference value over all set partitions (n <= 8).
#[pyfunction]
fn mvc_oracle(g: &Graph) -> PyResult<u32> {
    solver::mvc_oracle(&g.inner).map_err(value_err)
}

/// First vertex pair no monochromatic-interior path serves, or None
/// when the coloring is a valid MVC-coloring. Colors are one id per
/// vertex, as a list or as the "0,1,1,2" string the solver prints.
#[pyfunction]
fn check_coloring(g: &Graph, colors: ColorsArg) -> PyResult<Option<(usize, usize)>> {
    unserved_pair(&g.inner, &colors.0).map_err(value_err)
}

struct ColorsArg(VertexColoring);

impl<'a, 'py> FromPyObject<'a, 'py> for ColorsArg {
    type Error = PyErr;

    fn extract(ob: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if let Ok(text) = ob.extract::<String>() {
            return VertexColoring::parse(&text).map(ColorsArg).map_err(value_err);
        }
        let ids: Vec<u32> = ob.extract()?;
        VertexColoring::new(ids).map(ColorsArg).map_err(value_err)
    }
}

/// Bounds report (leafy-tree lower bound, diameter and minimum-degree
/// bounds, the tree witness, and the exact value for n <= 12) as JSON.
#[pyfunction]
fn bounds_json(g: &Graph) -> PyResult<String> {
    let exact = if g.inner.n() <= solver::DEFAULT_CAP {
        Some(solver::mvc_exact(&g.inner).map_err(value_err)?.value)
    } else {
        None
    };
    let report = bounds_report(&g.inner, exact).map_err(value_err)?;
    to_json(&report)
}

/// Spanning tree with the most leaves found (exhaustive for n <= 10):
/// (edge list, leaf count, exact flag).
#[pyfunction]
fn max_leaf_tree(g: &Graph) -> PyResult<(Vec<(usize, usize)>, u32, bool)> {
    let t = max_leaf_spanning_tree(&g.inner).map_err(value_err)?;
    Ok((t.edges, t.leaf_count, t.exact))
}

/// Construct a named family member; tags and parameters match the CLI
/// (`path`, `cycle`, `complete`, `star`, `double-star`,
/// `clique-pendant-path`, `clique-edge-path`, `eg-extremal-g1`,
/// `clique-plus-p3`; snake_case accepted).
#[pyfunction]
#[pyo3(signature = (family, n=None, t=None, a=None, b=None, d=None, extra=None))]
fn construct(
    family: &str,
    n: Option<usize>,
    t: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    d: Option<usize>,
    extra: Option<usize>,
) -> PyResult<Graph> {
    fn need(v: Option<usize>, name: &str, tag: &str) -> PyResult<usize> {
        v.ok_or_else(|| PyValueError::new_err(format!("family {tag} needs {name}")))
    }
    let canon = family.replace('_', "-");
    let spec = match canon.as_str() {
        "path" => Family::Path { n: need(n, "n", family)? },
        "cycle" => Family::Cycle { n: need(n, "n", family)? },
        "complete" => Family::Complete { n: need(n, "n", family)? },
        "star" => Family::Star { n: need(n, "n", family)? },
        "double-star" => Family::DoubleStar {
            a: need(a, "a", family)?,
            b: need(b, "b", family)?,
        },
        "clique-pendant-path" => Family::CliquePendantPath {
            n: need(n, "n", family)?,
            d: need(d, "d", family)?,
        },
        "clique-edge-path" => Family::CliqueEdgePath {
            n: need(n, "n", family)?,
            t: need(t, "t", family)?,
        },
        "eg-extremal-g1" => Family::EgExtremalG1 {
            n: need(n, "n", family)?,
            t: need(t, "t", family)?,
            extra: extra.unwrap_or(0),
        },
        "clique-plus-p3" => Family::CliquePlusP3 { n: need(n, "n", family)? },
        _ => return Err(PyValueError::new_err(format!("unknown family {family:?}"))),
    };
    let inner = extremal::construct(&spec).map_err(value_err)?;
    Ok(Graph { inner })
}

/// Every connected graph on n vertices up to isomorphism (n <= 8),
/// optionally restricted to one edge count.
#[pyfunction]
#[pyo3(signature = (n, m=None))]
fn enumerate_connected(n: usize, m: Option<usize>) -> PyResult<Vec<Graph>> {
    let graphs = enumerate::enumerate_connected(n, m).map_err(value_err)?;
    Ok(graphs.into_iter().map(|inner| Graph { inner }).collect())
}

/// Least edge count that forces mvc >= k on every connected graph.
#[pyfunction]
fn f_v(n: usize, k: usize) -> Option<usize> {
    extremal::f_v(n, k)
}

/// Greatest edge count below which mvc <= k is guaranteed (k = n only).
#[pyfunction]
fn g_v(n: usize, k: usize) -> Option<usize> {
    extremal::g_v(n, k)
}

/// Sharp lower bound on mvc over connected (n, m)-graphs.
#[pyfunction]
fn eg_lower_bound(n: usize, m: usize) -> Option<u32> {
    extremal::eg_lower_bound(n, m)
}

/// Largest diameter over connected (n, m)-graphs.
#[pyfunction]
fn max_diameter(n: usize, m: usize) -> Option<u32> {
    mvc::bounds::max_diameter(n, m)
}

/// Closed form for cycles: n for n <= 5, then 3.
#[pyfunction]
fn cycle_mvc(n: usize) -> Option<u32> {
    mvc::bounds::cycle_mvc(n)
}

/// (mvc(G), mvc(complement), sum); both sides must be connected.
#[pyfunction]
fn ng_sum(g: &Graph) -> PyResult<(u32, u32, u32)> {
    let r = nordhaus::ng_sum(&g.inner).map_err(value_err)?;
    Ok((r.mvc, r.mvc_complement, r.sum))
}

/// Exhaustive complement-pair verification at order n (4 <= n <= 8), JSON.
#[pyfunction]
fn verify_ng_json(n: usize) -> PyResult<String> {
    to_json(&nordhaus::verify_ng(n).map_err(value_err)?)
}

/// Exhaustive edge-count threshold verification at order n (3 <= n <= 8), JSON.
#[pyfunction]
fn verify_erdos_gallai_json(n: usize) -> PyResult<String> {
    to_json(&extremal::verify_erdos_gallai(n).map_err(value_err)?)
}

/// Run one named claim check (same ids as the CLI), returning the
/// report as JSON; `corpus` optionally points at a graph6 file.
#[pyfunction]
#[pyo3(signature = (claim, n_max, corpus=None))]
fn run_check_json(claim: &str, n_max: usize, corpus: Option<PathBuf>) -> PyResult<String> {
    let claim = claim.parse().map_err(value_err)?;
    let report = run_check(claim, n_max, corpus.as_deref()).map_err(value_err)?;
    to_json(&report)
}

#[pymodule]
fn mvc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("SOLVER_CAP", solver::DEFAULT_CAP)?;
    m.add("ORACLE_CAP", solver::ORACLE_MAX)?;
    m.add("ENUMERATION_CAP", enumerate::ENUMERATION_MAX)?;
    m.add_class::<Graph>()?;
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(mvc_exact, m)?)?;
    m.add_function(wrap_pyfunction!(mvc_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(check_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_json, m)?)?;
    m.add_function(wrap_pyfunction!(max_leaf_tree, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(f_v, m)?)?;
    m.add_function(wrap_pyfunction!(g_v, m)?)?;
    m.add_function(wrap_pyfunction!(eg_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(max_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_mvc, m)?)?;
    m.add_function(wrap_pyfunction!(ng_sum, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ng_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_erdos_gallai_json, m)?)?;
    m.add_function(wrap_pyfunction!(run_check_json, m)?)?;
    Ok(())
}
