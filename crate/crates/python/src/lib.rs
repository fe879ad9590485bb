//! Python bindings: graphs, packing numbers, enumeration, constructions,
//! catalogs and claim checks.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use kappa3::enumerate::{enumerate_matching, GraphClassQuery};
use kappa3::harness::{Harness, VerificationReport};
use kappa3::steiner::{self, SteinerTree, TerminalSet, TreePacking};
use kappa3::{families, graph6};

fn err(e: kappa3::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", module = "pykappa3", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(kappa3::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        kappa3::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph6::decode(text).map(PyGraph).map_err(err)
    }

    fn to_graph6(&self) -> String {
        graph6::encode(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.order() && v < self.0.order() && self.0.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.degree(v).map_err(err)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn add_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.add_edge(u, v).map(PyGraph).map_err(err)
    }

    fn delete_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        self.0.delete_edge(u, v).map(PyGraph).map_err(err)
    }

    fn add_vertex(&self, neighbors: Vec<usize>) -> PyResult<Self> {
        let mut set = 0u32;
        for v in neighbors {
            if v >= self.0.order() {
                return Err(err(kappa3::Error::VertexOutOfRange {
                    vertex: v,
                    order: self.0.order(),
                }));
            }
            set |= 1 << v;
        }
        self.0
            .add_vertex_with_neighbors(set)
            .map(PyGraph)
            .map_err(err)
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        self.0.delete_vertex(v).map(PyGraph).map_err(err)
    }

    fn canonical_form(&self) -> String {
        kappa3::canonical_form(&self.0).to_string()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        kappa3::are_isomorphic(&self.0, &other.0)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", graph6::encode(&self.0))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }
}

fn terminal_set(g: &PyGraph, s: &[usize]) -> PyResult<TerminalSet> {
    TerminalSet::new(&g.0, s).map_err(err)
}

#[pyfunction]
fn kappa_set(g: &PyGraph, terminals: Vec<usize>) -> PyResult<usize> {
    steiner::kappa_set(&g.0, &terminal_set(g, &terminals)?).map_err(err)
}

type Trees = Vec<Vec<(usize, usize)>>;

/// `(value, trees)` where each tree is a list of edges.
#[pyfunction]
#[pyo3(signature = (g, terminals, target = None))]
fn max_packing(
    g: &PyGraph,
    terminals: Vec<usize>,
    target: Option<usize>,
) -> PyResult<(usize, Trees)> {
    let r = steiner::max_packing(&g.0, &terminal_set(g, &terminals)?, target).map_err(err)?;
    Ok((
        r.value,
        r.packing.trees.into_iter().map(|t| t.edges).collect(),
    ))
}

#[pyfunction]
fn verify_packing(
    g: &PyGraph,
    terminals: Vec<usize>,
    trees: Vec<Vec<(usize, usize)>>,
) -> PyResult<bool> {
    let packing = TreePacking {
        terminals: terminal_set(g, &terminals)?,
        trees: trees.into_iter().map(SteinerTree::from_edges).collect(),
    };
    Ok(steiner::verify_packing(&g.0, &packing))
}

#[pyfunction]
fn kappa_k(g: &PyGraph, k: usize) -> PyResult<usize> {
    steiner::kappa_k(&g.0, k).map_err(err)
}

#[pyfunction]
fn kappa_bar_k(g: &PyGraph, k: usize) -> PyResult<usize> {
    steiner::kappa_bar_k(&g.0, k).map_err(err)
}

#[pyfunction]
fn menger(g: &PyGraph, x: usize, y: usize) -> PyResult<usize> {
    steiner::menger_local_connectivity(&g.0, x, y).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, m_min = None, m_max = None, connected = false))]
fn enumerate(
    n: usize,
    m_min: Option<usize>,
    m_max: Option<usize>,
    connected: bool,
) -> PyResult<Vec<PyGraph>> {
    let top = n * n.saturating_sub(1) / 2;
    let q = GraphClassQuery::new(n, m_min.unwrap_or(0), m_max.unwrap_or(top), connected)
        .map_err(err)?;
    Ok(enumerate_matching(&q)
        .map_err(err)?
        .into_iter()
        .map(PyGraph)
        .collect())
}

#[pyfunction]
fn complete_graph(n: usize) -> PyResult<PyGraph> {
    families::complete_graph(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn empty_graph(n: usize) -> PyResult<PyGraph> {
    families::empty(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn path(n: usize) -> PyResult<PyGraph> {
    families::path(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    families::cycle(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn wheel(n: usize) -> PyResult<PyGraph> {
    families::wheel(n).map(PyGraph).map_err(err)
}

#[pyfunction]
fn join(g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    families::join(&g.0, &h.0).map(PyGraph).map_err(err)
}

#[pyfunction]
fn disjoint_union(g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    families::disjoint_union(&g.0, &h.0)
        .map(PyGraph)
        .map_err(err)
}

#[pyfunction]
fn attach_k4(g: &PyGraph, u: usize) -> PyResult<PyGraph> {
    families::attach_k4(&g.0, u).map(PyGraph).map_err(err)
}

#[pyfunction]
fn regular_graph(m: usize, d: usize) -> PyResult<PyGraph> {
    families::regular_graph(m, d).map(PyGraph).map_err(err)
}

#[pyfunction]
fn remark_construction(n: usize, l: usize) -> PyResult<PyGraph> {
    families::remark_construction(n, l)
        .map(PyGraph)
        .map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// The extremal catalog of order `n` as a dict.
#[pyfunction]
fn extremal_catalog<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let c = py.detach(|| families::extremal_catalog(n)).map_err(err)?;
    to_py(py, &serde_json::to_value(&c).expect("catalog serialises"))
}

/// Run one claim check and return its report as a dict. `n` selects the
/// order for `theorem` and `inductive`.
#[pyfunction]
#[pyo3(signature = (claim, n = None))]
fn verify<'py>(py: Python<'py>, claim: &str, n: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let run = |h: &mut Harness| -> kappa3::Result<VerificationReport> {
        match (claim, n) {
            ("lemma3", _) => h.lemma3(),
            ("lemma4", _) => h.lemma4(),
            ("lemma5", _) => h.lemma5(),
            ("lemma6", _) => h.lemma6(),
            ("theorem", Some(n)) => h.theorem(n),
            ("inductive", Some(n)) => h.inductive(n),
            ("observations", _) => h.observations(),
            ("remark", _) => h.remark(9, 7),
            _ => Err(kappa3::Error::InvalidParameters(format!(
                "unknown claim {claim:?} (theorem and inductive need n)"
            ))),
        }
    };
    let rep = py.detach(|| run(&mut Harness::new())).map_err(err)?;
    to_py(py, &rep.to_json(true))
}

#[pymodule]
fn pykappa3(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(kappa_set, m)?)?;
    m.add_function(wrap_pyfunction!(max_packing, m)?)?;
    m.add_function(wrap_pyfunction!(verify_packing, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_k, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_bar_k, m)?)?;
    m.add_function(wrap_pyfunction!(menger, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(complete_graph, m)?)?;
    m.add_function(wrap_pyfunction!(empty_graph, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(wheel, m)?)?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(attach_k4, m)?)?;
    m.add_function(wrap_pyfunction!(regular_graph, m)?)?;
    m.add_function(wrap_pyfunction!(remark_construction, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
