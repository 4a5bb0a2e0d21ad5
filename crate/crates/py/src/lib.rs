//! Python bindings: `import tarlab`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tarlab::census::{run_census as census_row, GraphSource};
use tarlab::export::to_dot;
use tarlab::feasibility;
use tarlab::graph6::{parse_graph6, write_graph6};
use tarlab::hamilton::{hamilton_search, HamiltonMode, Verdict, DEFAULT_BUDGET};
use tarlab::iso::IsoMethod;
use tarlab::tar;
use tarlab::verify::{verify_claims, ClaimStatus, Selection};
use tarlab::{FamilySpec, ParameterKind, VertexSet};

fn err(e: tarlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(name: &str) -> PyResult<ParameterKind> {
    name.parse().map_err(err)
}

fn to_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(tarlab::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        tarlab::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text.trim()).map(PyGraph).map_err(err)
    }

    /// Builds a named family, e.g. `Graph.family("complete_bipartite:2,3")`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        spec.build().map(PyGraph).map_err(err)
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn graph6(&self) -> String {
        write_graph6(&self.0)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        tarlab::canon::is_isomorphic(&self.0, &other.0)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", write_graph6(&self.0))
    }
}

#[pyclass(name = "TarGraph", frozen)]
struct PyTarGraph(tar::TarGraph);

#[pymethods]
impl PyTarGraph {
    #[new]
    fn new(kind_name: &str, g: &PyGraph) -> PyResult<Self> {
        tar::build_tar(kind(kind_name)?, &g.0).map(PyTarGraph).map_err(err)
    }

    fn kind(&self) -> &'static str {
        self.0.kind().name()
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn sets(&self) -> Vec<Vec<usize>> {
        to_lists(self.0.sets())
    }

    fn extremal_sets(&self) -> Vec<Vec<usize>> {
        to_lists(self.0.extremal_sets())
    }

    fn connectivity_profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = tar::connectivity_profile(&self.0);
        let d = PyDict::new(py);
        d.set_item("connected", p.connected)?;
        d.set_item("threshold", p.threshold)?;
        d.set_item("extreme", p.extreme)?;
        Ok(d)
    }

    /// (max degree, min degree).
    fn degree_stats(&self) -> (usize, usize) {
        let d = tar::degree_stats(&self.0);
        (d.max_degree, d.min_degree)
    }

    fn hypercube_dimension(&self) -> PyResult<usize> {
        tar::hypercube_dimension(&self.0).map_err(err)
    }

    fn cut_vertices(&self) -> Vec<Vec<usize>> {
        to_lists(&tar::cut_vertices(&self.0))
    }

    /// Returns ("yes", witness sets) or ("no" | "unknown", None).
    #[pyo3(signature = (mode="path", budget=DEFAULT_BUDGET))]
    fn hamilton(&self, mode: &str, budget: u64) -> PyResult<(&'static str, Option<Vec<Vec<usize>>>)> {
        let mode = match mode {
            "path" => HamiltonMode::Path,
            "cycle" => HamiltonMode::Cycle,
            other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
        };
        let sg = self.0.to_set_graph();
        Ok(match hamilton_search(&sg.adj, mode, budget).verdict {
            Verdict::Yes(w) => ("yes", Some(w.iter().map(|&i| sg.labels[i].to_vec()).collect())),
            Verdict::No => ("no", None),
            Verdict::Unknown => ("unknown", None),
        })
    }

    fn to_dot(&self) -> String {
        to_dot(&self.0.to_set_graph(), &format!("{} TAR", self.0.kind()))
    }
}

#[pyfunction]
fn kinds() -> Vec<&'static str> {
    ParameterKind::ALL.iter().map(|k| k.name()).collect()
}

/// (value, extremal) where extremal is the upper value for minimizing kinds and the
/// lower value for maximizing kinds.
#[pyfunction]
fn parameter_values(kind_name: &str, g: &PyGraph) -> PyResult<(usize, usize)> {
    let v = feasibility::parameter_values(kind(kind_name)?, &g.0).map_err(err)?;
    Ok((v.value, v.extremal))
}

#[pyfunction]
fn extremal_sets(kind_name: &str, g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    Ok(to_lists(&feasibility::extremal_feasible_sets(kind(kind_name)?, &g.0).map_err(err)?))
}

#[pyfunction]
fn is_feasible(kind_name: &str, g: &PyGraph, vertices: Vec<usize>) -> PyResult<bool> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.0.order()) {
        return Err(PyValueError::new_err(format!("vertex {v} out of range")));
    }
    feasibility::is_feasible(kind(kind_name)?, &g.0, VertexSet::from_vertices(vertices)).map_err(err)
}

#[pyfunction]
fn irrelevant_vertices(kind_name: &str, g: &PyGraph) -> PyResult<Vec<usize>> {
    Ok(feasibility::irrelevant_vertices(kind(kind_name)?, &g.0).map_err(err)?.to_vec())
}

#[pyfunction]
#[pyo3(signature = (kind_name, g, h, method=None))]
fn tar_isomorphic(kind_name: &str, g: &PyGraph, h: &PyGraph, method: Option<&str>) -> PyResult<bool> {
    let method = match method {
        None => None,
        Some("setsystem") => Some(IsoMethod::SetSystem),
        Some("direct") => Some(IsoMethod::Direct),
        Some(other) => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    Ok(tarlab::iso::tar_isomorphic(kind(kind_name)?, &g.0, &h.0, method).map_err(err)?.isomorphic)
}

#[pyfunction]
fn run_census<'py>(py: Python<'py>, kind_name: &str, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let row = census_row(kind(kind_name)?, n, &GraphSource::Builtin).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("kind", row.kind.name())?;
    d.set_item("n", row.n)?;
    d.set_item("universe", row.universe)?;
    d.set_item("unique", row.unique)?;
    d.set_item("ratio", row.ratio)?;
    Ok(d)
}

/// Runs the verification suite (or the given claim ids) and returns
/// {"passed", "failed", "flagged", "failures", "text"}.
#[pyfunction]
#[pyo3(signature = (ids=None))]
fn verify<'py>(py: Python<'py>, ids: Option<Vec<String>>) -> PyResult<Bound<'py, PyDict>> {
    let report = verify_claims(&ids.map_or(Selection::All, Selection::Ids));
    let failures: Vec<String> =
        report.claims.iter().filter(|c| c.status == ClaimStatus::Fail).map(|c| c.id.clone()).collect();
    let d = PyDict::new(py);
    d.set_item("passed", report.passed)?;
    d.set_item("failed", report.failed)?;
    d.set_item("flagged", report.flagged)?;
    d.set_item("failures", failures)?;
    d.set_item("text", report.to_text())?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "tarlab")]
fn tarlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTarGraph>()?;
    m.add_function(wrap_pyfunction!(kinds, m)?)?;
    m.add_function(wrap_pyfunction!(parameter_values, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_sets, m)?)?;
    m.add_function(wrap_pyfunction!(is_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(irrelevant_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(tar_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(run_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
