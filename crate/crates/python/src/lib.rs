//! Python bindings: partitions, invariants and the main verification entry
//! points of `flamingo`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use flamingo::combinat::{self, OrderedSetPartition};
use flamingo::diagrams::build_tensor_diagram;
use flamingo::grassmann::{compare_up_to_sign, gc_jellyfish, phi_star};
use flamingo::invariants;
use flamingo::polyring::MatrixPolynomial;
use flamingo::relations;
use flamingo::specht::{self, SpechtModule, SpechtShape};
use flamingo::tableaux::enumerate_tableaux;

fn value_error(e: flamingo::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An ordered set partition of `{1..n}`, written `"2 3 6 10|5 7 8 9|1 4"`.
#[pyclass(
    name = "Partition",
    frozen,
    eq,
    hash,
    skip_from_py_object,
    module = "pyflamingo"
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition {
    inner: OrderedSetPartition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = text.parse().map_err(value_error)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.blocks().to_vec()
    }

    fn is_noncrossing(&self) -> bool {
        self.inner.is_noncrossing()
    }

    fn canonical(&self) -> Self {
        Self {
            inner: self.inner.canonical(),
        }
    }

    fn rotate(&self) -> Self {
        Self {
            inner: self.inner.rotate(),
        }
    }

    fn reflect(&self) -> Self {
        Self {
            inner: self.inner.reflect(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.num_blocks()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.inner)
    }
}

/// An exact polynomial in the entries `x_{a,j}` of a `k × n` matrix.
#[pyclass(
    name = "Polynomial",
    frozen,
    eq,
    skip_from_py_object,
    module = "pyflamingo"
)]
#[derive(Clone, PartialEq)]
struct PyPolynomial {
    inner: MatrixPolynomial,
}

#[pymethods]
impl PyPolynomial {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: MatrixPolynomial::from_json(text).map_err(value_error)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `(rows, coefficient)` pairs, leading term first.
    fn terms(&self) -> Vec<(Vec<usize>, BigInt)> {
        self.inner
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| (m.rows(), c.clone()))
            .collect()
    }

    fn evaluate(&self, matrix: Vec<Vec<i64>>) -> PyResult<BigInt> {
        self.inner.evaluate(&matrix).map_err(value_error)
    }

    fn __neg__(&self) -> Self {
        Self {
            inner: self.inner.neg(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.num_terms()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "<Polynomial n={} k={} terms={}>",
            self.inner.n(),
            self.inner.k(),
            self.inner.num_terms()
        )
    }
}

#[pyfunction]
fn jellyfish_invariant(partition: &PyPartition, r: usize) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial {
        inner: invariants::jellyfish_invariant(&partition.inner, r).map_err(value_error)?,
    })
}

/// One dict per tableau with its tentacles, reading word, inversions and sign.
#[pyfunction]
fn tableaux<'py>(
    py: Python<'py>,
    partition: &PyPartition,
    r: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    enumerate_tableaux(&partition.inner, r)
        .map_err(value_error)?
        .iter()
        .map(|t| {
            let d = PyDict::new(py);
            d.set_item("tentacles", t.tentacles().to_vec())?;
            d.set_item("reading_word", t.reading_word())?;
            d.set_item("inversions", t.inversion_number())?;
            d.set_item("sign", t.sign())?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn exact_rank(polynomials: Vec<PyRef<'_, PyPolynomial>>) -> usize {
    let polys: Vec<MatrixPolynomial> = polynomials.iter().map(|p| p.inner.clone()).collect();
    specht::exact_rank(&polys).rank
}

/// `+1` or `-1` relating the Grassmann–Cayley expansion to `[π]_r`, or
/// `None` when they are not proportional.
#[pyfunction]
fn gc_compare(partition: &PyPartition, r: usize) -> PyResult<Option<i32>> {
    let gc =
        phi_star(&gc_jellyfish(&partition.inner, r).map_err(value_error)?).map_err(value_error)?;
    let inv = invariants::jellyfish_invariant(&partition.inner, r).map_err(value_error)?;
    Ok(compare_up_to_sign(&gc, &inv).as_sign())
}

#[pyfunction]
#[pyo3(signature = (partition, r, format = "json"))]
fn tensor_diagram(partition: &PyPartition, r: usize, format: &str) -> PyResult<String> {
    build_tensor_diagram(&partition.inner, r)
        .and_then(|w| w.export(format))
        .map_err(value_error)
}

#[pyfunction]
fn specht_member(partition: &PyPartition, r: usize) -> PyResult<bool> {
    let pi = &partition.inner;
    let module = SpechtShape::flamingo(pi.n(), pi.num_blocks(), r)
        .and_then(SpechtModule::new)
        .map_err(value_error)?;
    Ok(module.contains(&invariants::jellyfish_invariant(pi, r).map_err(value_error)?))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, r, prefix = Vec::new()))]
fn verify_recurrence(
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
    r: usize,
    prefix: Vec<Vec<usize>>,
) -> PyResult<bool> {
    relations::verify_recurrence(&prefix, &a, &b, &c, r).map_err(value_error)
}

#[pyfunction]
fn enumerate_noncrossing(n: usize, d: usize, r: usize) -> PyResult<Vec<PyPartition>> {
    Ok(combinat::enumerate_noncrossing(n, d, r)
        .map_err(value_error)?
        .into_iter()
        .map(|inner| PyPartition { inner })
        .collect())
}

/// `(orbit size, rank)` of the rotation orbit.
#[pyfunction]
fn orbit_rank(partition: &PyPartition, r: usize) -> PyResult<(usize, usize)> {
    let report = relations::orbit_rank(&partition.inner, r).map_err(value_error)?;
    Ok((report.orbit, report.rank))
}

/// `(|S|, rank)` for the nearly noncrossing family.
#[pyfunction]
fn conjecture(n: usize, d: usize, r: usize) -> PyResult<(usize, usize)> {
    let report = relations::verify_conjecture(n, d, r).map_err(value_error)?;
    Ok((report.family_size, report.rank))
}

/// `(family size, rank, dimension, all members in the module)`.
#[pyfunction]
fn hook_basis(n: usize, d: usize) -> PyResult<(usize, usize, String, bool)> {
    let report = specht::verify_hook_basis(n, d).map_err(value_error)?;
    Ok((
        report.family_size,
        report.rank,
        report.dimension,
        report.all_in_module,
    ))
}

#[pymodule]
fn pyflamingo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(jellyfish_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(exact_rank, m)?)?;
    m.add_function(wrap_pyfunction!(gc_compare, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(specht_member, m)?)?;
    m.add_function(wrap_pyfunction!(verify_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_noncrossing, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_rank, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(hook_basis, m)?)?;
    Ok(())
}
