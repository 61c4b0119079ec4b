//! Python bindings for `consets_core`.
//!
//! Big integers come back as Python `int`, exact ratios as `fractions.Fraction`.

use consets_core::exactmath::{char_poly, BigRational};
use consets_core::oracle::{build_km_pn, census, OracleCap, SimpleGraph};
use consets_core::{pell, recurrence, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Validation { .. } | Error::Invariant(_) => {
            PyArithmeticError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn oracle_cap(cap: Option<usize>) -> PyResult<OracleCap> {
    OracleCap::new(cap.unwrap_or(OracleCap::DEFAULT)).map_err(to_py)
}

/// Exact summary of `K_m × P_n`.
#[pyclass(frozen, get_all, skip_from_py_object, module = "consets")]
#[derive(Clone)]
pub struct ProductResult {
    m: usize,
    n: usize,
    count: BigInt,
    total_order: BigInt,
    average: BigRational,
    density: BigRational,
}

#[pymethods]
impl ProductResult {
    fn __repr__(&self) -> String {
        format!(
            "ProductResult(m={}, n={}, count={}, total_order={}, average={}, density={})",
            self.m, self.n, self.count, self.total_order, self.average, self.density
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        (self.m, self.n, &self.count, &self.total_order)
            == (other.m, other.n, &other.count, &other.total_order)
    }
}

impl From<consets_core::ProductResult> for ProductResult {
    fn from(r: consets_core::ProductResult) -> Self {
        ProductResult {
            m: r.m,
            n: r.n,
            count: r.count,
            total_order: r.total_order,
            average: r.average,
            density: r.density,
        }
    }
}

/// Connected-set census of an arbitrary graph.
#[pyclass(frozen, get_all, skip_from_py_object, module = "consets")]
#[derive(Clone)]
pub struct CensusReport {
    by_size: Vec<BigInt>,
    count: BigInt,
    total_order: BigInt,
    average: BigRational,
}

#[pymethods]
impl CensusReport {
    fn __repr__(&self) -> String {
        format!(
            "CensusReport(count={}, total_order={}, average={})",
            self.count, self.total_order, self.average
        )
    }
}

impl From<consets_core::oracle::CensusReport> for CensusReport {
    fn from(r: consets_core::oracle::CensusReport) -> Self {
        CensusReport {
            by_size: r.by_size,
            count: r.count,
            total_order: r.total_order,
            average: r.average,
        }
    }
}

#[pyfunction]
fn count_connected_sets(m: usize, n: usize) -> PyResult<BigInt> {
    consets_core::count_connected_sets(m, n).map_err(to_py)
}

#[pyfunction]
fn total_order(m: usize, n: usize) -> PyResult<BigInt> {
    consets_core::total_order(m, n).map_err(to_py)
}

#[pyfunction]
fn average_order(m: usize, n: usize) -> PyResult<BigRational> {
    consets_core::average_order(m, n).map_err(to_py)
}

#[pyfunction]
fn density(m: usize, n: usize) -> PyResult<BigRational> {
    consets_core::density(m, n).map_err(to_py)
}

#[pyfunction]
fn product_result(m: usize, n: usize) -> PyResult<ProductResult> {
    consets_core::product_result(m, n)
        .map(Into::into)
        .map_err(to_py)
}

/// Results for `n = 1..=n_max`.
#[pyfunction]
fn product_sweep(m: usize, n_max: usize) -> PyResult<Vec<ProductResult>> {
    let rows = consets_core::product_sweep(m, n_max).map_err(to_py)?;
    Ok(rows.into_iter().map(Into::into).collect())
}

/// `A_m` as a list of rows.
#[pyfunction]
fn recurrence_matrix(m: usize) -> PyResult<Vec<Vec<BigInt>>> {
    let rec = consets_core::build_recurrence_matrix(m).map_err(to_py)?;
    Ok(rec.matrix().rows().map(|r| r.to_vec()).collect())
}

/// Columns `[f_1(m,k), ..., f_m(m,k)]` for `k = 1..=k_max`.
#[pyfunction]
fn f_table(m: usize, k_max: usize) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(consets_core::f_table(m, k_max)
        .map_err(to_py)?
        .columns()
        .to_vec())
}

/// Columns `[s_1(m,k), ..., s_m(m,k)]` for `k = 1..=k_max`.
#[pyfunction]
fn s_table(m: usize, k_max: usize) -> PyResult<Vec<Vec<BigInt>>> {
    let st = consets_core::s_table_recursive(m, k_max).map_err(to_py)?;
    (1..=k_max)
        .map(|k| st.column(k).map(|c| c.to_vec()).map_err(to_py))
        .collect()
}

/// Characteristic polynomial of `A_m`, lowest power first.
#[pyfunction]
fn char_poly_coefficients(m: usize) -> PyResult<Vec<BigInt>> {
    let rec = consets_core::build_recurrence_matrix(m).map_err(to_py)?;
    Ok(char_poly(rec.matrix())
        .map_err(to_py)?
        .coefficients()
        .to_vec())
}

/// `f(m,1..=k_max)` from the scalar recurrence.
#[pyfunction]
fn stream_f(m: usize, k_max: usize) -> PyResult<Vec<BigInt>> {
    let rec = recurrence::build_recurrence(m).map_err(to_py)?;
    Ok(recurrence::stream_f(&rec, k_max))
}

/// Raises `ArithmeticError` when a predicted coefficient is off.
#[pyfunction]
fn validate_coefficients(m: usize) -> PyResult<()> {
    recurrence::validate_coefficients(m)
        .map(|_| ())
        .map_err(to_py)
}

#[pyfunction]
fn fibonacci(n: usize) -> BigInt {
    recurrence::fibonacci(n)
}

#[pyfunction]
fn ladder_count(n: usize) -> PyResult<BigInt> {
    pell::ladder_count(n).map_err(to_py)
}

#[pyfunction]
fn ladder_average(n: usize) -> PyResult<BigRational> {
    pell::ladder_average(n).map_err(to_py)
}

#[pyfunction]
fn vince_average(n: usize) -> PyResult<BigRational> {
    pell::vince_average(n).map_err(to_py)
}

/// Brute-force census of `K_m × P_n`.
#[pyfunction]
#[pyo3(signature = (m, n, cap=None))]
fn oracle_census(m: usize, n: usize, cap: Option<usize>) -> PyResult<CensusReport> {
    let g = build_km_pn(m, n).map_err(to_py)?;
    census(g.graph(), oracle_cap(cap)?)
        .map(Into::into)
        .map_err(to_py)
}

/// Brute-force census of a graph on vertices `0..vertices`.
#[pyfunction]
#[pyo3(signature = (vertices, edges, cap=None))]
fn graph_census(
    vertices: usize,
    edges: Vec<(usize, usize)>,
    cap: Option<usize>,
) -> PyResult<CensusReport> {
    let mut g = SimpleGraph::new(vertices).map_err(to_py)?;
    for (u, v) in edges {
        g.add_edge(u, v).map_err(to_py)?;
    }
    census(&g, oracle_cap(cap)?).map(Into::into).map_err(to_py)
}

#[pymodule]
fn consets(module: &Bound<'_, PyModule>) -> PyResult<()> {
    module.add_class::<ProductResult>()?;
    module.add_class::<CensusReport>()?;
    module.add_function(wrap_pyfunction!(count_connected_sets, module)?)?;
    module.add_function(wrap_pyfunction!(total_order, module)?)?;
    module.add_function(wrap_pyfunction!(average_order, module)?)?;
    module.add_function(wrap_pyfunction!(density, module)?)?;
    module.add_function(wrap_pyfunction!(product_result, module)?)?;
    module.add_function(wrap_pyfunction!(product_sweep, module)?)?;
    module.add_function(wrap_pyfunction!(recurrence_matrix, module)?)?;
    module.add_function(wrap_pyfunction!(f_table, module)?)?;
    module.add_function(wrap_pyfunction!(s_table, module)?)?;
    module.add_function(wrap_pyfunction!(char_poly_coefficients, module)?)?;
    module.add_function(wrap_pyfunction!(stream_f, module)?)?;
    module.add_function(wrap_pyfunction!(validate_coefficients, module)?)?;
    module.add_function(wrap_pyfunction!(fibonacci, module)?)?;
    module.add_function(wrap_pyfunction!(ladder_count, module)?)?;
    module.add_function(wrap_pyfunction!(ladder_average, module)?)?;
    module.add_function(wrap_pyfunction!(vince_average, module)?)?;
    module.add_function(wrap_pyfunction!(oracle_census, module)?)?;
    module.add_function(wrap_pyfunction!(graph_census, module)?)?;
    Ok(())
}
