use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;
use spectra_core::drg::{check_spectral_excess, DEFAULT_DRG_TOL};
use spectra_core::io::{polys_from_json, preintersection_from_json, spectrum_from_json};
use spectra_core::orthopoly::spectral_excess;
use spectra_core::spectral::{walk_moments, DEFAULT_CLUSTER_TOL};
use spectra_core::transforms::{
    convert_along, parse_path, polys_from_preintersection, preintersection_from_spectrum,
    roundtrip_check, spectrum_from_polys, spectrum_from_preintersection,
};
use spectra_core::{hoffman, polys_from_spectrum, preintersection_from_polys, Representation};

create_exception!(spectra, SpectraError, PyValueError, "Domain error; `code` names its kind.");

fn to_py(e: spectra_core::Error) -> PyErr {
    Python::attach(|py| {
        let err = SpectraError::new_err(e.to_string());
        if let Err(set) = err.value(py).setattr("code", e.code()) {
            return set;
        }
        err
    })
}

fn json_to_py(py: Python<'_>, v: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pyclass(name = "Spectrum", module = "spectra", frozen, from_py_object)]
#[derive(Clone)]
struct PySpectrum(spectra_core::Spectrum);

#[pymethods]
impl PySpectrum {
    #[new]
    fn new(eigenvalues: Vec<f64>, multiplicities: Vec<usize>) -> PyResult<Self> {
        spectra_core::Spectrum::new(eigenvalues, multiplicities)
            .map(PySpectrum)
            .map_err(to_py)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        spectrum_from_json(text).map(PySpectrum).map_err(to_py)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[getter]
    fn eigenvalues(&self) -> Vec<f64> {
        self.0.eigenvalues().to_vec()
    }

    #[getter]
    fn multiplicities(&self) -> Vec<usize> {
        self.0.multiplicities().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    #[getter]
    fn lambda0(&self) -> f64 {
        self.0.lambda0()
    }

    /// Average closed-walk counts `c(0..=max_len)`.
    fn walk_moments(&self, max_len: usize) -> Vec<f64> {
        walk_moments(&self.0, max_len).c
    }

    fn polys(&self) -> PyResult<PyPolySequence> {
        polys_from_spectrum(&self.0).map(PyPolySequence).map_err(to_py)
    }

    fn preintersection(&self) -> PyResult<PyPreintersection> {
        preintersection_from_spectrum(&self.0)
            .map(PyPreintersection)
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Spectrum(eigenvalues={:?}, multiplicities={:?})",
            self.0.eigenvalues(),
            self.0.multiplicities()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "PolySequence", module = "spectra", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolySequence(spectra_core::PolySequence);

#[pymethods]
impl PyPolySequence {
    #[new]
    fn new(omega: Vec<Vec<f64>>, lambda0: f64) -> PyResult<Self> {
        spectra_core::PolySequence::new(omega, lambda0)
            .map(PyPolySequence)
            .map_err(to_py)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        polys_from_json(text).map(PyPolySequence).map_err(to_py)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    /// Row `i` holds the coefficients of `p_i`, lowest degree first.
    #[getter]
    fn omega(&self) -> Vec<Vec<f64>> {
        self.0.omega().to_vec()
    }

    #[getter]
    fn lambda0(&self) -> f64 {
        self.0.lambda0()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    /// `p_i(x)`.
    fn eval(&self, i: usize, x: f64) -> PyResult<f64> {
        if i > self.0.d() {
            return Err(PyValueError::new_err(format!("index {i} exceeds d = {}", self.0.d())));
        }
        Ok(self.0.eval(i, x))
    }

    /// Coefficients of `H = p_0 + … + p_d`, lowest degree first.
    fn hoffman(&self) -> Vec<f64> {
        hoffman(&self.0).coeffs().to_vec()
    }

    fn spectral_excess(&self) -> f64 {
        spectral_excess(&self.0)
    }

    fn spectrum(&self) -> PyResult<PySpectrum> {
        spectrum_from_polys(&self.0)
            .map(|r| PySpectrum(r.spectrum))
            .map_err(to_py)
    }

    fn preintersection(&self) -> PyResult<PyPreintersection> {
        preintersection_from_polys(&self.0)
            .map(PyPreintersection)
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("PolySequence(omega={:?}, lambda0={})", self.0.omega(), self.0.lambda0())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "PreintersectionSet", module = "spectra", frozen, from_py_object)]
#[derive(Clone)]
struct PyPreintersection(spectra_core::PreintersectionSet);

#[pymethods]
impl PyPreintersection {
    #[new]
    fn new(alpha: Vec<f64>, beta: Vec<f64>, gamma: Vec<f64>, lambda0: f64) -> PyResult<Self> {
        spectra_core::PreintersectionSet::new(alpha, beta, gamma, lambda0)
            .map(PyPreintersection)
            .map_err(to_py)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        preintersection_from_json(text)
            .map(PyPreintersection)
            .map_err(to_py)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[getter]
    fn alpha(&self) -> Vec<f64> {
        self.0.alpha().to_vec()
    }

    #[getter]
    fn beta(&self) -> Vec<f64> {
        self.0.beta().to_vec()
    }

    #[getter]
    fn gamma(&self) -> Vec<f64> {
        self.0.gamma().to_vec()
    }

    #[getter]
    fn lambda0(&self) -> f64 {
        self.0.lambda0()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    /// The tridiagonal matrix R as a list of rows.
    fn recurrence_matrix(&self) -> Vec<Vec<f64>> {
        self.0.recurrence_matrix().matrix().to_rows()
    }

    fn spectral_excess(&self) -> f64 {
        self.0.spectral_excess()
    }

    fn polys(&self) -> PyResult<PyPolySequence> {
        polys_from_preintersection(&self.0)
            .map(PyPolySequence)
            .map_err(to_py)
    }

    fn spectrum(&self) -> PyResult<PySpectrum> {
        spectrum_from_preintersection(&self.0)
            .map(|r| PySpectrum(r.spectrum))
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "PreintersectionSet(alpha={:?}, beta={:?}, gamma={:?}, lambda0={})",
            self.0.alpha(),
            self.0.beta(),
            self.0.gamma(),
            self.0.lambda0()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "Graph", module = "spectra", frozen)]
struct PyGraph(spectra_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        spectra_core::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(to_py)
    }

    /// `format` is one of "edgelist", "adjmatrix", "graph6".
    #[classmethod]
    fn parse(_cls: &Bound<'_, PyType>, text: &str, format: &str) -> PyResult<Self> {
        let format = format.parse().map_err(PyValueError::new_err)?;
        spectra_core::parse_graph(text.as_bytes(), format)
            .map(PyGraph)
            .map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }

    #[pyo3(signature = (cluster_tol = DEFAULT_CLUSTER_TOL))]
    fn spectrum(&self, cluster_tol: f64) -> PyResult<PySpectrum> {
        spectra_core::spectrum_of_graph(&self.0, cluster_tol)
            .map(PySpectrum)
            .map_err(to_py)
    }

    /// Spectral excess theorem test; returns the report as a dict.
    #[pyo3(signature = (cluster_tol = DEFAULT_CLUSTER_TOL, tol = DEFAULT_DRG_TOL))]
    fn check_drg(&self, py: Python<'_>, cluster_tol: f64, tol: f64) -> PyResult<Py<PyAny>> {
        let report = check_spectral_excess(&self.0, cluster_tol, tol).map_err(to_py)?;
        json_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.0.n(), self.0.edges().len())
    }
}

fn representation(obj: &Bound<'_, PyAny>) -> PyResult<Representation> {
    if let Ok(s) = obj.extract::<PySpectrum>() {
        Ok(Representation::Spectrum(s.0))
    } else if let Ok(p) = obj.extract::<PyPolySequence>() {
        Ok(Representation::Polys(p.0))
    } else if let Ok(p) = obj.extract::<PyPreintersection>() {
        Ok(Representation::Preintersection(p.0))
    } else {
        Err(PyValueError::new_err(
            "expected a Spectrum, PolySequence or PreintersectionSet",
        ))
    }
}

fn wrap(py: Python<'_>, rep: Representation) -> PyResult<Py<PyAny>> {
    Ok(match rep {
        Representation::Spectrum(s) => Py::new(py, PySpectrum(s))?.into_any(),
        Representation::Polys(p) => Py::new(py, PyPolySequence(p))?.into_any(),
        Representation::Preintersection(p) => Py::new(py, PyPreintersection(p))?.into_any(),
    })
}

/// Applies a conversion path such as "sp→poly,poly→pre".
#[pyfunction]
fn convert(py: Python<'_>, value: &Bound<'_, PyAny>, path: &str) -> PyResult<Py<PyAny>> {
    let start = representation(value)?;
    let path = parse_path(path).map_err(to_py)?;
    wrap(py, convert_along(&start, &path).map_err(to_py)?)
}

/// Runs a conversion cycle; returns a dict with the deviation and verdict.
#[pyfunction]
#[pyo3(signature = (value, path, tol = 1e-7))]
fn roundtrip(py: Python<'_>, value: &Bound<'_, PyAny>, path: &str, tol: f64) -> PyResult<Py<PyAny>> {
    let start = representation(value)?;
    let path = parse_path(path).map_err(to_py)?;
    let report = roundtrip_check(&start, &path, tol).map_err(to_py)?;
    json_to_py(py, &report)
}

#[pymodule]
fn spectra(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpectrum>()?;
    m.add_class::<PyPolySequence>()?;
    m.add_class::<PyPreintersection>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(roundtrip, m)?)?;
    m.add("SpectraError", m.py().get_type::<SpectraError>())?;
    Ok(())
}
