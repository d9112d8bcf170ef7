//! Python bindings. Every analysis returns the same JSON document as the
//! command-line tool, converted to Python objects.

use leibniz_core::catalog;
use leibniz_core::cyclic::CyclicPresentation;
use leibniz_core::exactnum::parse_gaussian;
use leibniz_core::io::{parse_input, AnyPresentation, Input};
use leibniz_core::report::{self, Options, Outcome, Status};
use leibniz_core::{Backend, Field, GaussianRational, Scalar, Tolerance, C64};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyInt, PyString};

create_exception!(leibniz, LeibnizError, PyValueError, "Raised for invalid input or a failed computation.");

fn to_py_err(e: leibniz_core::Error) -> PyErr {
    LeibnizError::new_err(e.to_string())
}

fn parse_backend(name: &str) -> PyResult<Backend> {
    match name {
        "exact" => Ok(Backend::Exact),
        "float" => Ok(Backend::Float),
        other => Err(LeibnizError::new_err(format!("unknown backend {other:?}; expected \"exact\" or \"float\""))),
    }
}

fn options(tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Options> {
    let mut opts = Options { allow_invalid, ..Options::default() };
    if let Some(eps) = tolerance {
        opts.tolerance = Tolerance::scaled(eps).map_err(to_py_err)?;
    }
    opts.backend = backend.map(parse_backend).transpose()?;
    Ok(opts)
}

fn to_python(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = value.to_string();
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Coefficients given as strings or ints stay exact; any float or complex
/// makes the whole presentation floating.
fn coefficient(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if obj.is_instance_of::<PyBool>() {
        return Err(LeibnizError::new_err("booleans are not coefficients"));
    }
    if let Ok(s) = obj.cast::<PyString>() {
        let z = parse_gaussian(s.to_str()?).map_err(to_py_err)?;
        return Ok(z.to_scalar());
    }
    if obj.is_instance_of::<PyInt>() {
        let v: i64 = obj.extract()?;
        return Ok(GaussianRational::from_i64(v).to_scalar());
    }
    let z: C64 = obj.extract()?;
    Ok(z.to_scalar())
}

fn presentation(coeffs: &[Bound<'_, PyAny>]) -> PyResult<AnyPresentation> {
    let scalars = coeffs.iter().map(coefficient).collect::<PyResult<Vec<_>>>()?;
    let exact = scalars.iter().all(|s| s.backend() == Backend::Exact);
    let built = if exact {
        let c = scalars.iter().map(GaussianRational::from_scalar).collect::<Result<Vec<_>, _>>();
        c.and_then(CyclicPresentation::new).map(AnyPresentation::Exact)
    } else {
        let c = scalars.iter().map(|s| C64::from_scalar(&s.to_float())).collect::<Result<Vec<_>, _>>();
        c.and_then(CyclicPresentation::new).map(AnyPresentation::Float)
    };
    built.map_err(to_py_err)
}

/// A Leibniz algebra given by structure constants or by a cyclic presentation.
#[pyclass(module = "leibniz", frozen)]
struct Algebra {
    input: Input,
}

impl Algebra {
    fn run(
        &self,
        py: Python<'_>,
        f: impl FnOnce(&Input, &Options) -> leibniz_core::Result<Outcome>,
        tolerance: Option<f64>,
        backend: Option<&str>,
        allow_invalid: bool,
    ) -> PyResult<Py<PyAny>> {
        let opts = options(tolerance, backend, allow_invalid)?;
        let outcome = f(&self.input, &opts).map_err(to_py_err)?;
        to_python(py, &outcome.json)
    }
}

#[pymethods]
impl Algebra {
    /// Parse the JSON file format (structure constants or `{"type": "cyclic", …}`).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Algebra { input: parse_input(text).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| LeibnizError::new_err(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Cyclic algebra with `a·aⁿ = α₂a² + … + α_n aⁿ`; pass `[α₂, …, α_n]`.
    #[staticmethod]
    fn cyclic(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        Ok(Algebra { input: Input::Cyclic(presentation(&coeffs)?) })
    }

    /// One of the bundled example algebras; see [`fixture_names`].
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        catalog::fixture(name)
            .map(|input| Algebra { input })
            .ok_or_else(|| LeibnizError::new_err(format!("no fixture named {name:?}")))
    }

    #[getter]
    fn dim(&self) -> usize {
        match &self.input {
            Input::Algebra(a) => a.dim(),
            Input::Cyclic(p) => p.dim(),
        }
    }

    #[getter]
    fn backend(&self) -> String {
        self.input.backend().to_string()
    }

    fn to_json(&self) -> String {
        match &self.input {
            Input::Algebra(a) => a.to_json(),
            Input::Cyclic(p) => p.to_json(),
        }
    }

    fn is_leibniz(&self) -> bool {
        self.input.algebra().is_leibniz()
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn check(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::check, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn classify(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::classify, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn analyze(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::analyze, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn series(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::series, tolerance, backend, allow_invalid)
    }

    /// `element` is the `"c1,c2,…"` text accepted by the command line.
    #[pyo3(signature = (element=None, *, tolerance=None, backend=None, allow_invalid=false))]
    fn engel(
        &self,
        py: Python<'_>,
        element: Option<&str>,
        tolerance: Option<f64>,
        backend: Option<&str>,
        allow_invalid: bool,
    ) -> PyResult<Py<PyAny>> {
        let element = element.map(report::parse_element).transpose().map_err(to_py_err)?;
        self.run(py, |i, o| report::engel(i, element.as_deref(), o), tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn cartan(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::cartan, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn maximals(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::maximals, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn derivations(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::derivation_space, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn killing(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::killing_form, tolerance, backend, allow_invalid)
    }

    #[pyo3(signature = (*, tolerance=None, backend=None, allow_invalid=false))]
    fn is_cyclic(&self, py: Python<'_>, tolerance: Option<f64>, backend: Option<&str>, allow_invalid: bool) -> PyResult<Py<PyAny>> {
        self.run(py, report::cyclicity, tolerance, backend, allow_invalid)
    }

    fn __repr__(&self) -> String {
        let kind = if matches!(self.input, Input::Cyclic(_)) { "cyclic" } else { "structure constants" };
        format!("<Algebra dim={} backend={} ({kind})>", self.dim(), self.backend())
    }
}

/// Classify `aa³ = αa² + βa³`.
#[pyfunction]
#[pyo3(signature = (alpha, beta, *, tolerance=None))]
fn classify_pair(py: Python<'_>, alpha: C64, beta: C64, tolerance: Option<f64>) -> PyResult<Py<PyAny>> {
    let opts = options(tolerance, None, false)?;
    let outcome = report::classify_pair(alpha, beta, &opts).map_err(to_py_err)?;
    debug_assert_eq!(outcome.status, Status::Ok);
    to_python(py, &outcome.json)
}

#[pyfunction]
fn fixture_names() -> Vec<String> {
    catalog::fixtures().into_iter().map(|f| f.name).collect()
}

#[pymodule]
fn leibniz(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(classify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add("LeibnizError", m.py().get_type::<LeibnizError>())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backend_names() {
        assert_eq!(parse_backend("exact").unwrap(), Backend::Exact);
        assert_eq!(parse_backend("float").unwrap(), Backend::Float);
    }

    #[test]
    fn fixture_names_are_sorted() {
        let names = fixture_names();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(names.iter().any(|n| n == "type3_gamma2i"));
    }
}
