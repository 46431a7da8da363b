//! Python bindings: partitions, characters, Hurwitz numbers and series,
//! the Mariño–Vafa series and the verification suites.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cutjoin::characters;
use cutjoin::coeffring::Rat;
use cutjoin::hurwitz;
use cutjoin::marinovafa;
use cutjoin::suites::{self, Bounds};

fn err(e: cutjoin::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

#[pyclass(name = "Partition", eq, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(cutjoin::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        cutjoin::Partition::new(parts).map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(Self).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> u32 {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn z(&self) -> BigInt {
        self.0.z()
    }

    fn kappa(&self) -> i64 {
        self.0.kappa()
    }

    fn n(&self) -> u64 {
        self.0.n()
    }

    fn hooks(&self) -> Vec<u32> {
        self.0.hooks()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn dim(&self) -> BigInt {
        characters::dim_rep(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// Accepts a Partition, a list of parts or a string such as "2,1".
fn to_partition(obj: &Bound<'_, PyAny>) -> PyResult<cutjoin::Partition> {
    if let Ok(p) = obj.cast::<PyPartition>() {
        return Ok(p.get().0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    let parts: Vec<u32> = obj.extract()?;
    cutjoin::Partition::new(parts).map_err(err)
}

#[pyfunction]
fn partitions(d: u32) -> Vec<PyPartition> {
    cutjoin::enumerate_partitions(d)
        .into_iter()
        .map(PyPartition)
        .collect()
}

#[pyfunction]
fn character(nu: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>) -> PyResult<i64> {
    characters::character(&to_partition(nu)?, &to_partition(mu)?).map_err(err)
}

#[pyfunction]
fn central_character(nu: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    characters::central_character(&to_partition(nu)?, &to_partition(mu)?).map_err(err)
}

/// (partition labels, rows) of the character table of S_d.
#[pyfunction]
fn character_table(d: u32) -> (Vec<String>, Vec<Vec<i64>>) {
    let t = characters::table(d);
    (
        t.partitions().iter().map(|p| p.to_string()).collect(),
        t.rows().to_vec(),
    )
}

#[pyfunction]
#[pyo3(signature = (g, h, eta, connected = false))]
fn hurwitz_number<'py>(
    py: Python<'py>,
    g: i64,
    h: u32,
    eta: &Bound<'py, PyAny>,
    connected: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let v = hurwitz::hurwitz_number(g, h, &to_partition(eta)?, connected).map_err(err)?;
    fraction(py, &v)
}

/// The p_η coefficient of Φ_h as a sinh/cosh string, or as x-exponents
/// mapped to fractions with `raw=True`.
#[pyfunction]
#[pyo3(signature = (h, eta, connected = false, raw = false))]
fn hurwitz_coefficient<'py>(
    py: Python<'py>,
    h: u32,
    eta: &Bound<'py, PyAny>,
    connected: bool,
    raw: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let eta = to_partition(eta)?;
    let phi = if connected {
        hurwitz::phi_circ(h, eta.size())
    } else {
        hurwitz::phi_bullet(h, eta.size())
    };
    let c = phi.coeff(&eta);
    if !raw {
        return Ok(c.render_hyperbolic().into_pyobject(py)?.into_any());
    }
    let d = PyDict::new(py);
    for (k, v) in c.terms() {
        d.set_item(*k, fraction(py, v)?)?;
    }
    Ok(d.into_any())
}

/// (partition, sin-quotient string) pairs of R^• or R through degree D.
#[pyfunction]
#[pyo3(signature = (d_max, connected = false))]
fn marinovafa_series(d_max: u32, connected: bool) -> Vec<(String, String)> {
    let s = if connected {
        marinovafa::r_connected(d_max)
    } else {
        marinovafa::r_bullet(d_max)
    };
    s.terms()
        .iter()
        .filter(|(mu, _)| !mu.is_empty())
        .map(|(mu, c)| (mu.to_string(), c.render_sin()))
        .collect()
}

#[pyclass(name = "Report", frozen, skip_from_py_object)]
struct PyReport(cutjoin::VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn suite(&self) -> String {
        self.0.suite.clone()
    }

    #[getter]
    fn passed(&self) -> usize {
        self.0.summary.passed
    }

    #[getter]
    fn failed(&self) -> usize {
        self.0.summary.failed
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    fn all_passed(&self) -> bool {
        self.0.all_passed()
    }

    fn failures(&self) -> Vec<(String, String)> {
        self.0
            .failures()
            .map(|c| (c.id.clone(), c.witness.clone().unwrap_or_default()))
            .collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (suite, quick = false, max_d = None, series_d = None, h = None))]
fn verify(
    py: Python<'_>,
    suite: &str,
    quick: bool,
    max_d: Option<u32>,
    series_d: Option<u32>,
    h: Option<u32>,
) -> PyResult<PyReport> {
    let bounds = Bounds {
        max_d,
        series_d,
        h,
        quick,
    };
    let suite = suite.to_string();
    py.detach(move || suites::run_suite(&suite, &bounds))
        .map(PyReport)
        .map_err(err)
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    suites::SUITES.to_vec()
}

#[pymodule]
fn cutjoin_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(central_character, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_number, m)?)?;
    m.add_function(wrap_pyfunction!(hurwitz_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(marinovafa_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    Ok(())
}
