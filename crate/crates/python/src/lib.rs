use std::time::Duration;

use pentforge::catalog::Catalog;
use pentforge::constructors::{self, parse_pbd, parse_sts};
use pentforge::search::{cycle_types, SearchBudget};
use pentforge::{Completion, Error};
use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } => PyTimeoutError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(name = "Design", module = "pentforge_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyDesign(pentforge::Design);

#[pymethods]
impl PyDesign {
    #[new]
    #[pyo3(signature = (v, k, lines, r=None))]
    fn new(v: usize, k: usize, lines: Vec<Vec<usize>>, r: Option<usize>) -> PyResult<Self> {
        Ok(PyDesign(pentforge::Design::new(v, k, lines).map_err(to_py)?.with_claimed_r(r)))
    }

    /// Parses a design file, or an orbit file which is expanded.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let orbit = text.lines().any(|l| l.split('#').next().unwrap_or("").trim() == "kind: orbit");
        let d = if orbit {
            constructors::expand_orbits(&constructors::parse_orbit(text).map_err(to_py)?)
        } else {
            pentforge::parse_design(text)
        };
        d.map(PyDesign).map_err(to_py)
    }

    fn to_text(&self) -> String {
        pentforge::serialize_design(&self.0)
    }

    #[getter]
    fn v(&self) -> usize {
        self.0.v()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn b(&self) -> usize {
        self.0.b()
    }

    #[getter]
    fn r_claimed(&self) -> Option<usize> {
        self.0.r_claimed()
    }

    #[getter]
    fn lines(&self) -> Vec<Vec<usize>> {
        self.0.lines().to_vec()
    }

    /// Verification summary as a dict: pentagonal, r, violations, ...
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let rep = pentforge::verify_pentagonal(&self.0);
        let out = PyDict::new(py);
        out.set_item("pentagonal", rep.pentagonal)?;
        out.set_item("is_pls", rep.pls.is_pls)?;
        out.set_item("v", rep.v)?;
        out.set_item("b", rep.b)?;
        out.set_item("k", rep.k)?;
        out.set_item("r", rep.r)?;
        let violations: Vec<String> = rep.all_violations().map(|x| x.to_string()).collect();
        out.set_item("violations", violations)?;
        Ok(out)
    }

    fn is_pentagonal(&self) -> bool {
        pentforge::verify_pentagonal(&self.0).pentagonal
    }

    fn opposite_line(&self, x: usize) -> PyResult<Vec<usize>> {
        if x >= self.0.v() {
            return Err(PyValueError::new_err(format!("point {x} out of range")));
        }
        Ok(pentforge::opposite_line(&self.0, x))
    }

    /// Opposite line pairs as pairs of lines.
    fn olps(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let set = pentforge::count_olps(&self.0);
        set.lines(&self.0).map(|(a, b)| (a.clone(), b.clone())).collect()
    }

    fn olp_count(&self) -> usize {
        pentforge::count_olps(&self.0).q()
    }

    fn deficiency_graph(&self) -> PyGraph {
        PyGraph(pentforge::build_deficiency(&self.0))
    }

    /// Universal invariants that fail; empty for a well-formed geometry.
    fn invariant_violations(&self) -> Vec<String> {
        pentforge::invariant_violations(&self.0)
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.0.relabel(&perm).map(PyDesign).map_err(to_py)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        let r = self.0.r_claimed().map_or("?".to_string(), |r| r.to_string());
        format!("Design(k={}, r={r}, v={}, b={})", self.0.k(), self.0.v(), self.0.b())
    }
}

#[pyclass(name = "Graph", module = "pentforge_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph(pentforge::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        pentforge::Graph::new(n, edges).map(PyGraph).map_err(to_py)
    }

    #[staticmethod]
    fn petersen() -> Self {
        PyGraph(pentforge::Graph::petersen())
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err(format!("cycle length {n} < 3")));
        }
        Ok(PyGraph(pentforge::Graph::cycle(n)))
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        pentforge::parse_graph(text).map(PyGraph).map_err(to_py)
    }

    fn to_text(&self) -> String {
        pentforge::serialize_graph(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn girth(&self) -> Option<usize> {
        pentforge::girth(&self.0)
    }

    fn is_connected(&self) -> bool {
        pentforge::is_connected(&self.0)
    }

    /// Component counts by kind: complete bipartite K_{k,k}, girth >= 5, other.
    fn classify<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyDict>> {
        let c = pentforge::classify(&self.0, k);
        let out = PyDict::new(py);
        out.set_item("complete_bipartite", c.complete_bipartite_count())?;
        out.set_item("girth_at_least_five", c.girth_five_count())?;
        out.set_item("other", c.other_count())?;
        Ok(out)
    }

    fn moore_pent(&self, k: usize) -> PyResult<PyDesign> {
        pentforge::moore_pent(&self.0, k).map(PyDesign).map_err(to_py)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.0.n(), self.0.edge_count())
    }
}

#[pyfunction]
fn parameters(k: usize, r: usize) -> (usize, Option<usize>) {
    let p = pentforge::parameters(k, r);
    (p.v, p.b)
}

#[pyfunction]
fn spectrum(k: usize, r: usize) -> PyResult<(String, String)> {
    if k < 2 || r < 1 {
        return Err(PyValueError::new_err(format!("need k >= 2 and r >= 1, got k = {k}, r = {r}")));
    }
    let fact = pentforge::known_spectrum(k, r);
    Ok((fact.status.to_string(), fact.label.to_string()))
}

#[pyfunction]
fn max_olps_bound(r: usize) -> PyResult<usize> {
    pentforge::max_olps_bound(r).map_err(to_py)
}

#[pyfunction]
fn two_olp_excluded(r: usize) -> PyResult<bool> {
    pentforge::two_olp_excluded(r).map_err(to_py)
}

#[pyfunction]
fn partition_p(n: i64) -> PyResult<u128> {
    if n > pentforge::search::PARTITION_MAX_N {
        return Err(PyValueError::new_err(format!("n = {n} is beyond the supported range")));
    }
    Ok(pentforge::partition_p(n))
}

#[pyfunction]
fn pent2_count(r: usize) -> PyResult<u128> {
    if r < 2 || r as i64 + 3 > pentforge::search::PARTITION_MAX_N {
        return Err(PyValueError::new_err(format!("r = {r} out of range")));
    }
    Ok(pentforge::pent2_count(r))
}

/// `(cycle type, design)` pairs, one per isomorphism class.
#[pyfunction]
fn pent2_enumerate(r: usize) -> PyResult<Vec<(String, PyDesign)>> {
    if r < 2 {
        return Err(PyValueError::new_err(format!("r = {r} < 2")));
    }
    Ok(cycle_types(r).into_iter().map(|ct| (ct.to_string(), PyDesign(ct.design()))).collect())
}

#[pyfunction]
fn bose_from_sts(text: &str, drop: usize) -> PyResult<PyDesign> {
    let s = parse_sts(text).map_err(to_py)?;
    constructors::bose_pent3(&s, drop).map(PyDesign).map_err(to_py)
}

#[pyfunction]
fn bose_from_pbd(text: &str, drop: usize) -> PyResult<PyDesign> {
    let p = parse_pbd(text).map_err(to_py)?;
    constructors::pbd_pent3(&p, drop).map(PyDesign).map_err(to_py)
}

/// Places one part on each group of the transversal design TD(3, g).
#[pyfunction]
fn compose_td3(g: usize, parts: Vec<PyDesign>) -> PyResult<PyDesign> {
    let gdd = constructors::td3(g).map_err(to_py)?;
    let parts: Vec<_> = parts.into_iter().enumerate().map(|(i, d)| (i, d.0)).collect();
    constructors::gdd_compose(&gdd, &parts).map(PyDesign).map_err(to_py)
}

#[pyfunction]
fn degenerate_pent(k: usize) -> PyResult<PyDesign> {
    constructors::degenerate_pent(k).map(PyDesign).map_err(to_py)
}

/// Returns a design, or `None` when no geometry has this deficiency graph.
/// Raises `TimeoutError` when the budget runs out first.
#[pyfunction]
#[pyo3(signature = (graph, k, r, nodes=100_000_000, seconds=60.0, seed=0))]
fn complete_from_deficiency(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    r: usize,
    nodes: u64,
    seconds: f64,
    seed: u64,
) -> PyResult<Option<PyDesign>> {
    if !(seconds.is_finite() && seconds > 0.0) {
        return Err(PyValueError::new_err("seconds must be positive"));
    }
    let budget = SearchBudget { max_nodes: nodes, max_time: Duration::from_secs_f64(seconds), seed };
    let g = graph.0.clone();
    let outcome = py.detach(|| pentforge::complete_from_deficiency(&g, k, r, &budget)).map_err(to_py)?;
    Ok(match outcome {
        Completion::Found(d) => Some(PyDesign(d)),
        Completion::Unsatisfiable => None,
    })
}

#[pyfunction]
fn catalog_ids() -> PyResult<Vec<String>> {
    let cat = Catalog::open().map_err(to_py)?;
    Ok(cat.entries().iter().map(|e| e.id.clone()).collect())
}

#[pyfunction]
fn catalog_load(id: &str) -> PyResult<PyDesign> {
    pentforge::catalog_load(id).map(PyDesign).map_err(to_py)
}

/// `(id, passed, failures)` per entry, sorted by id.
#[pyfunction]
fn catalog_verify_all(py: Python<'_>) -> PyResult<Vec<(String, bool, Vec<String>)>> {
    let report = py.detach(pentforge::catalog_verify_all).map_err(to_py)?;
    Ok(report.entries.into_iter().map(|e| (e.id.clone(), e.passed(), e.failures)).collect())
}

#[pymodule]
fn pentforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDesign>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(parameters, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(max_olps_bound, m)?)?;
    m.add_function(wrap_pyfunction!(two_olp_excluded, m)?)?;
    m.add_function(wrap_pyfunction!(partition_p, m)?)?;
    m.add_function(wrap_pyfunction!(pent2_count, m)?)?;
    m.add_function(wrap_pyfunction!(pent2_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(bose_from_sts, m)?)?;
    m.add_function(wrap_pyfunction!(bose_from_pbd, m)?)?;
    m.add_function(wrap_pyfunction!(compose_td3, m)?)?;
    m.add_function(wrap_pyfunction!(degenerate_pent, m)?)?;
    m.add_function(wrap_pyfunction!(complete_from_deficiency, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_load, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_verify_all, m)?)?;
    Ok(())
}
