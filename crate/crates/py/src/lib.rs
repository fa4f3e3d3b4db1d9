//! Python bindings for the exact scalars, operators, diagram calculus and
//! verification runner.

use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use qlie_core::classical::{self, AlgebraPresentation};
use qlie_core::quantum::{self, ModuleFamily as CoreModuleFamily, QuantumFamily as CoreQuantumFamily};
use qlie_core::runner::{self, Families as CoreFamilies, Suite};
use qlie_core::{diagrams, uqsl2, Error, Var};

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero | Error::Pole { .. } => PyZeroDivisionError::new_err(e.to_string()),
        Error::Parse { .. } | Error::BadInput(_) | Error::Shape(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn var(name: &str) -> PyResult<Var> {
    match name {
        "v" => Ok(Var::V),
        "lam" => Ok(Var::Lam),
        "mu" => Ok(Var::Mu),
        _ => Err(PyValueError::new_err(format!("unknown variable {name:?} (v, lam, mu)"))),
    }
}

/// An element of ℚ(v, lam, mu), `q = v²`.
#[pyclass(name = "FieldElement", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFieldElement(qlie_core::FieldElement);

#[pymethods]
impl PyFieldElement {
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        qlie_core::FieldElement::parse(text).map(PyFieldElement).map_err(err)
    }

    #[staticmethod]
    fn from_int(n: i64) -> Self {
        PyFieldElement(qlie_core::FieldElement::from_int(n))
    }

    #[staticmethod]
    fn v() -> Self {
        PyFieldElement(qlie_core::FieldElement::v())
    }

    #[staticmethod]
    fn q() -> Self {
        PyFieldElement(qlie_core::FieldElement::q())
    }

    #[staticmethod]
    fn lam() -> Self {
        PyFieldElement(qlie_core::FieldElement::lam())
    }

    #[staticmethod]
    fn mu() -> Self {
        PyFieldElement(qlie_core::FieldElement::mu())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn substitute(&self, name: &str, value: &PyFieldElement) -> PyResult<Self> {
        self.0.substitute(var(name)?, &value.0).map(PyFieldElement).map_err(err)
    }

    fn at_q_one(&self) -> PyResult<Self> {
        self.0.at_q_one().map(PyFieldElement).map_err(err)
    }

    /// Value at rational `(v, lam, mu)` given as strings such as "3/2";
    /// `None` at a pole.
    #[pyo3(signature = (v, lam = "0", mu = "0"))]
    fn eval(&self, v: &str, lam: &str, mu: &str) -> PyResult<Option<String>> {
        let r = |s: &str| -> PyResult<_> {
            let x = qlie_core::FieldElement::parse(s).map_err(err)?;
            x.as_rational().ok_or_else(|| PyValueError::new_err(format!("{s:?} is not a rational number")))
        };
        Ok(self.0.eval(&[r(v)?, r(lam)?, r(mu)?]).map(|x| x.to_string()))
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inv().map(PyFieldElement).map_err(err)
    }

    fn __add__(&self, o: &PyFieldElement) -> Self {
        PyFieldElement(self.0.add_ref(&o.0))
    }

    fn __sub__(&self, o: &PyFieldElement) -> Self {
        PyFieldElement(self.0.sub_ref(&o.0))
    }

    fn __mul__(&self, o: &PyFieldElement) -> Self {
        PyFieldElement(self.0.mul_ref(&o.0))
    }

    fn __truediv__(&self, o: &PyFieldElement) -> PyResult<Self> {
        self.0.checked_div(&o.0).map(PyFieldElement).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyFieldElement(self.0.neg())
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.pow(e).map(PyFieldElement).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FieldElement({:?})", self.0.to_string())
    }
}

/// `[n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹)`.
#[pyfunction]
fn qint(n: u32) -> PyFieldElement {
    PyFieldElement(qlie_core::qint(n))
}

/// A sparse exact matrix between labelled tensor spaces.
#[pyclass(name = "LinearOperator", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyOperator(qlie_core::LinearOperator);

#[pymethods]
impl PyOperator {
    #[getter]
    fn nrows(&self) -> usize {
        self.0.nrows()
    }

    #[getter]
    fn ncols(&self) -> usize {
        self.0.ncols()
    }

    #[getter]
    fn domain(&self) -> String {
        self.0.domain().to_string()
    }

    #[getter]
    fn codomain(&self) -> String {
        self.0.codomain().to_string()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<PyFieldElement> {
        if i >= self.0.nrows() || j >= self.0.ncols() {
            return Err(PyValueError::new_err(format!("index ({i}, {j}) out of range")));
        }
        Ok(PyFieldElement(self.0.get(i, j)))
    }

    /// Nonzero entries as `(row, col, canonical string)`.
    fn entries(&self) -> Vec<(usize, usize, String)> {
        self.0.entries().map(|(i, j, x)| (i, j, x.to_string())).collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn transpose(&self) -> Self {
        PyOperator(self.0.transpose())
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().map(PyOperator).map_err(err)
    }

    fn kron(&self, o: &PyOperator) -> Self {
        PyOperator(self.0.kron(&o.0))
    }

    fn scale(&self, c: &PyFieldElement) -> Self {
        PyOperator(self.0.scale(&c.0))
    }

    fn substitute(&self, name: &str, value: &PyFieldElement) -> PyResult<Self> {
        self.0.substitute(var(name)?, &value.0).map(PyOperator).map_err(err)
    }

    fn at_q_one(&self) -> PyResult<Self> {
        self.0.at_q_one().map(PyOperator).map_err(err)
    }

    /// `self ∘ o`: `o` acts first.
    fn __matmul__(&self, o: &PyOperator) -> PyResult<Self> {
        self.0.compose(&o.0).map(PyOperator).map_err(err)
    }

    fn __add__(&self, o: &PyOperator) -> PyResult<Self> {
        self.0.add(&o.0).map(PyOperator).map_err(err)
    }

    fn __sub__(&self, o: &PyOperator) -> PyResult<Self> {
        self.0.sub(&o.0).map(PyOperator).map_err(err)
    }

    /// The matrix dump as a JSON string.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json()).expect("matrix serializes")
    }

    fn __repr__(&self) -> String {
        format!("LinearOperator({} → {}, {}x{}, {} nonzero)", self.0.domain(), self.0.codomain(), self.0.nrows(), self.0.ncols(), self.0.nnz())
    }
}

/// A family `X + λA + λ/([2]λ−1)B` with `A = (1−q⁻²)A₀`, `B = (1−q⁻²)B₀`.
#[pyclass(name = "QuantumFamily", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQuantumFamily(CoreQuantumFamily);

#[pymethods]
impl PyQuantumFamily {
    #[getter]
    fn pattern(&self) -> String {
        self.0.pattern.clone()
    }

    #[getter]
    fn x(&self) -> PyOperator {
        PyOperator(self.0.x.clone())
    }

    #[getter]
    fn a0(&self) -> PyOperator {
        PyOperator(self.0.a0.clone())
    }

    #[getter]
    fn b0(&self) -> PyOperator {
        PyOperator(self.0.b0.clone())
    }

    /// The family over ℚ(v, lam), or at a given `λ`.
    #[pyo3(signature = (lam = None))]
    fn assemble(&self, lam: Option<&PyFieldElement>) -> PyResult<PyOperator> {
        match lam {
            Some(l) => self.0.assemble_at(&l.0),
            None => self.0.assemble(),
        }
        .map(PyOperator)
        .map_err(err)
    }

    /// `([2]λ−1)` times the family.
    fn cleared(&self) -> PyResult<PyOperator> {
        self.0.cleared().map(PyOperator).map_err(err)
    }

    /// `λ = μ/([k](1−q⁻²))` followed by `q = 1`.
    fn degenerate(&self, k: u32) -> PyResult<PyOperator> {
        self.0.degenerate(k).map(PyOperator).map_err(err)
    }
}

#[pyclass(name = "ModuleFamily", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModuleFamily(CoreModuleFamily);

#[pymethods]
impl PyModuleFamily {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn family(&self) -> PyQuantumFamily {
        PyQuantumFamily(self.0.fam.clone())
    }

    /// Residual of the classical degeneration with `[k]`.
    fn limit_residual(&self, k: u32) -> PyResult<PyOperator> {
        quantum::module_limit_residual(&self.0, k).map(PyOperator).map_err(err)
    }
}

/// The certified adjoint pair and module families.
#[pyclass(name = "Families", frozen, skip_from_py_object)]
struct PyFamilies(CoreFamilies);

#[pymethods]
impl PyFamilies {
    #[getter]
    fn adjoint(&self) -> PyQuantumFamily {
        PyQuantumFamily(self.0.adjoint.clone())
    }

    #[getter]
    fn primed(&self) -> PyQuantumFamily {
        PyQuantumFamily(self.0.primed.clone())
    }

    fn module(&self, n: usize) -> PyResult<PyModuleFamily> {
        self.0.module(n).cloned().map(PyModuleFamily).map_err(err)
    }

    /// Certificates as `{family: {check: residual}}`.
    #[getter]
    fn certificates(&self) -> std::collections::BTreeMap<String, std::collections::BTreeMap<String, String>> {
        self.0.certificates.clone()
    }

    /// The cache bundle as a JSON string.
    fn to_json(&self) -> PyResult<String> {
        let b = self.0.to_bundle().map_err(err)?;
        Ok(serde_json::to_string(&b).expect("bundle serializes"))
    }
}

#[pyfunction]
#[pyo3(signature = (catalog_depth = runner::DEFAULT_CATALOG_DEPTH, seed = runner::DEFAULT_SEED))]
fn synthesize(py: Python<'_>, catalog_depth: usize, seed: u64) -> PyResult<PyFamilies> {
    py.detach(|| CoreFamilies::synthesize(catalog_depth, seed)).map(PyFamilies).map_err(err)
}

/// Runs a suite against freshly synthesized families and returns the report
/// as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = 3, seed = runner::DEFAULT_SEED))]
fn verify(py: Python<'_>, suite: &str, max_n: usize, seed: u64) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    py.detach(|| {
        let mut entries = Vec::new();
        if suite != Suite::Classical {
            let f = CoreFamilies::synthesize(runner::DEFAULT_CATALOG_DEPTH, seed)?;
            entries.extend(runner::quantum_entries(&f, max_n));
        }
        if suite != Suite::Quantum {
            entries.extend(runner::classical_entries(max_n, seed)?);
        }
        Ok(qlie_core::report::VerificationReport::new(seed, entries).to_json())
    })
    .map_err(err)
}

/// Matrix dump of a registered operator as a JSON string.
#[pyfunction]
#[pyo3(signature = (name, lam = None, at_q_one = false))]
fn dump(py: Python<'_>, name: &str, lam: Option<&str>, at_q_one: bool) -> PyResult<String> {
    let families = || CoreFamilies::synthesize(runner::DEFAULT_CATALOG_DEPTH, runner::DEFAULT_SEED);
    let j = py.detach(|| runner::dump_operator(name, lam, at_q_one, &families)).map_err(err)?;
    Ok(serde_json::to_string(&j).expect("matrix serializes"))
}

#[pyfunction]
fn rhat() -> PyOperator {
    PyOperator(uqsl2::intertwiners().rhat.clone())
}

#[pyfunction]
fn cup_cap() -> (PyOperator, PyOperator) {
    let b = uqsl2::intertwiners();
    (PyOperator(b.eps1.clone()), PyOperator(b.delta1.clone()))
}

/// The Jones-Wenzl projector `p_n` on `V1^⊗n`.
#[pyfunction]
#[pyo3(signature = (n, classical = false))]
fn jones_wenzl(n: usize, classical: bool) -> PyResult<PyOperator> {
    let regime = if classical { diagrams::Regime::Classical } else { diagrams::Regime::Quantum };
    diagrams::jones_wenzl(n, regime).map(|d| PyOperator(d.evaluate())).map_err(err)
}

#[pyfunction]
fn cabled_braiding(m: usize, n: usize) -> PyResult<PyOperator> {
    uqsl2::cabled_braiding(m, n).map(PyOperator).map_err(err)
}

#[pyfunction]
fn quantum_bracket() -> PyResult<PyOperator> {
    uqsl2::quantum_bracket().map(PyOperator).map_err(err)
}

/// A Lie-type bracket given by structure constants.
#[pyclass(name = "Algebra", frozen, skip_from_py_object)]
struct PyAlgebra(AlgebraPresentation);

#[pymethods]
impl PyAlgebra {
    /// Reads the corpus JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        classical::load_algebra_str(text).map(|(g, _)| PyAlgebra(g)).map_err(err)
    }

    #[staticmethod]
    fn sl2() -> Self {
        PyAlgebra(classical::sl2())
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `R(λ)` or `R(λ)'` on `g~⊗g~`.
    #[pyo3(signature = (primed = false))]
    fn family(&self, primed: bool) -> PyOperator {
        PyOperator(classical::classical_r(&self.0, primed))
    }

    /// Whether antisymmetry and the Jacobi identity hold.
    fn defects(&self) -> PyResult<(bool, bool)> {
        let d = classical::defects(&self.0, None).map_err(err)?;
        Ok((d.antisymmetry.is_zero, d.jacobi.is_zero))
    }

    fn to_json(&self) -> String {
        classical::dump_algebra(&self.0, &[])
    }
}

#[pymodule]
fn qlie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFieldElement>()?;
    m.add_class::<PyOperator>()?;
    m.add_class::<PyQuantumFamily>()?;
    m.add_class::<PyModuleFamily>()?;
    m.add_class::<PyFamilies>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(qint, m)?)?;
    m.add_function(wrap_pyfunction!(rhat, m)?)?;
    m.add_function(wrap_pyfunction!(cup_cap, m)?)?;
    m.add_function(wrap_pyfunction!(jones_wenzl, m)?)?;
    m.add_function(wrap_pyfunction!(cabled_braiding, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_bracket, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(dump, m)?)?;
    Ok(())
}
