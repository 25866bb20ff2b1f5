//! Python bindings: plane graphs, resonance graphs, daisy recognition and
//! corpus verification. Structured results come back as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use reskit::cli::{self, CliError};
use reskit::cube::{daisy_diagnosis, is_median_graph, DaisyVerdict};
use reskit::io::{self, resonance_to_dot, DotOptions};
use reskit::matching::{self, Limit};
use reskit::plane_graph::PlaneBipartiteGraph;
use reskit::resonance::{self, ResonanceGraph};
use reskit::theorems::{run_corpus, CorpusSpec};
use serde_json::Value;

create_exception!(pyreskit, ReskitError, PyValueError);
create_exception!(pyreskit, LimitExceededError, ReskitError);

fn err(e: impl Into<CliError>) -> PyErr {
    match e.into() {
        CliError::Limit(m) => LimitExceededError::new_err(m),
        other => ReskitError::new_err(other.to_string()),
    }
}

fn limit(n: Option<usize>) -> Limit {
    n.map_or(Limit::default(), Limit)
}

fn to_python<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?
        .call_method1("loads", (serde_json::to_string(v).unwrap(),))
}

#[pyclass(name = "PlaneGraph", module = "pyreskit", frozen)]
struct PyPlaneGraph {
    inner: PlaneBipartiteGraph,
}

#[pymethods]
impl PyPlaneGraph {
    /// Parses the JSON graph format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = io::parse(text.as_bytes()).map_err(err)?;
        Ok(PyPlaneGraph { inner })
    }

    /// A generated graph, e.g. `generate("fibonaccene", ["4"])`.
    #[staticmethod]
    #[pyo3(signature = (family, params=Vec::new()))]
    fn generate(family: &str, params: Vec<String>) -> PyResult<Self> {
        let inner = cli::generate(family, &params).map_err(err)?;
        Ok(PyPlaneGraph { inner })
    }

    fn to_json(&self) -> String {
        io::serialize(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn finite_face_count(&self) -> usize {
        self.inner.finite_face_count()
    }

    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_python(py, &cli::analyze(&self.inner).map_err(err)?)
    }

    /// `(value, witness edge ids)`.
    #[pyo3(signature = (limit=None))]
    fn fries_number(&self, limit: Option<usize>) -> PyResult<(usize, Vec<usize>)> {
        let f = matching::fries_number(&self.inner, self::limit(limit)).map_err(err)?;
        Ok((f.value, f.witness.edge_ids()))
    }

    #[pyo3(signature = (limit=None))]
    fn perfect_matchings(&self, limit: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
        let all = matching::enumerate_perfect_matchings(&self.inner, self::limit(limit))
            .map_err(err)?;
        Ok(all.iter().map(|m| m.edge_ids()).collect())
    }

    #[pyo3(signature = (limit=None))]
    fn forbidden_edges(&self, limit: Option<usize>) -> PyResult<Vec<usize>> {
        let f = matching::forbidden_edges(&self.inner, self::limit(limit)).map_err(err)?;
        Ok(f.to_vec())
    }

    #[pyo3(signature = (limit=None))]
    fn is_elementary(&self, limit: Option<usize>) -> PyResult<bool> {
        matching::is_elementary(&self.inner, self::limit(limit)).map_err(err)
    }

    #[pyo3(signature = (limit=None))]
    fn is_weakly_elementary(&self, limit: Option<usize>) -> PyResult<bool> {
        matching::is_weakly_elementary(&self.inner, self::limit(limit)).map_err(err)
    }

    fn is_peripherally_2_colorable(&self) -> PyResult<bool> {
        self.inner.is_peripherally_2_colorable().map_err(err)
    }

    #[pyo3(signature = (limit=None))]
    fn resonance_graph(&self, limit: Option<usize>) -> PyResult<PyResonanceGraph> {
        let inner = resonance::build_resonance_graph(&self.inner, self::limit(limit)).map_err(err)?;
        Ok(PyResonanceGraph { inner })
    }

    fn __repr__(&self) -> String {
        format!(
            "PlaneGraph(vertices={}, edges={}, finite_faces={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.finite_face_count()
        )
    }
}

#[pyclass(name = "ResonanceGraph", module = "pyreskit", frozen)]
struct PyResonanceGraph {
    inner: ResonanceGraph,
}

#[pymethods]
impl PyResonanceGraph {
    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// `(a, b, face)` triples.
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner.edges.iter().map(|e| (e.a, e.b, e.face)).collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_median(&self) -> PyResult<bool> {
        is_median_graph(&self.inner.to_simple_graph())
            .map_err(|e| ReskitError::new_err(e.to_string()))
    }

    /// The daisy certificate as a dict, or `None`.
    fn daisy<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        match daisy_diagnosis(&self.inner.to_simple_graph()) {
            DaisyVerdict::Daisy(cert) => {
                Ok(Some(to_python(py, &serde_json::to_value(&cert).unwrap())?))
            }
            DaisyVerdict::NotDaisy(_) => Ok(None),
        }
    }

    /// Why the graph is not a daisy cube, or `None` when it is one.
    fn not_daisy_reason(&self) -> Option<String> {
        match daisy_diagnosis(&self.inner.to_simple_graph()) {
            DaisyVerdict::Daisy(_) => None,
            DaisyVerdict::NotDaisy(reason) => Some(reason.to_string()),
        }
    }

    fn to_dot(&self) -> String {
        match daisy_diagnosis(&self.inner.to_simple_graph()) {
            DaisyVerdict::Daisy(cert) => {
                resonance_to_dot(&self.inner, &DotOptions::with_certificate(&cert))
            }
            DaisyVerdict::NotDaisy(_) => resonance_to_dot(
                &self.inner,
                &DotOptions {
                    edge_labels: true,
                    ..DotOptions::default()
                },
            ),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "ResonanceGraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Runs the corpus verifiers; returns the report with only disagreeing
/// entries under `reports` unless `full` is set.
#[pyfunction]
#[pyo3(signature = (corpus="chains:6", limit=None, full=false))]
fn verify<'py>(
    py: Python<'py>,
    corpus: &str,
    limit: Option<usize>,
    full: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let spec: CorpusSpec = corpus.parse().map_err(err)?;
    let report = py
        .detach(|| run_corpus(&spec, self::limit(limit)))
        .map_err(err)?;
    let mut value = serde_json::to_value(&report).unwrap();
    if !full {
        value["reports"] = serde_json::to_value(report.disagreeing().collect::<Vec<_>>()).unwrap();
    }
    to_python(py, &value)
}

#[pymodule]
fn pyreskit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlaneGraph>()?;
    m.add_class::<PyResonanceGraph>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("ReskitError", m.py().get_type::<ReskitError>())?;
    m.add("LimitExceededError", m.py().get_type::<LimitExceededError>())?;
    m.add("FORMAT_VERSION", io::FORMAT_VERSION)?;
    Ok(())
}
