//! Python bindings for the stringy-motives engine.
//!
//! The module mirrors the Rust surface: exact Laurent polynomials and
//! truncated series, the λ-ring operations (Adams, σ, plethystic Exp/Log),
//! the stringy series of symmetric products in both of its forms, and the
//! realization maps. All values are exact; rationals cross the boundary as
//! strings (`"3/2"`) so no precision is lost.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use stringy_motives::lambda::{adams_poly, plethystic_exp, plethystic_log, sigma_poly};
use stringy_motives::parse;
use stringy_motives::realize;
use stringy_motives::series::TruncatedSeries;
use stringy_motives::stringy;
use stringy_motives::{LaurentPoly, Rational, Realization, VarId};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn realization_of(name: &str) -> PyResult<Realization> {
    Realization::from_str(name).map_err(value_error)
}

fn var_of(name: &str) -> PyResult<VarId> {
    VarId::new(name).map_err(value_error)
}

/// An `int` or a `"p/q"` string, converted to an exact rational.
#[derive(FromPyObject)]
enum RationalArg {
    Int(i64),
    Text(String),
}

fn rational_of(arg: RationalArg) -> PyResult<Rational> {
    match arg {
        RationalArg::Int(n) => Ok(Rational::from_integer(n.into())),
        RationalArg::Text(s) => Rational::from_str(&s)
            .map_err(|e| value_error(format!("invalid rational '{s}': {e}"))),
    }
}

/// An exact Laurent polynomial in the realization variables u, v with
/// rational coefficients and rational exponents.
#[pyclass(name = "LaurentPoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly {
    inner: LaurentPoly,
}

#[pymethods]
impl PyPoly {
    /// Parses the canonical text form, e.g. `"v^4+22*v^2+1"`.
    #[new]
    #[pyo3(signature = (src, realization = "hodge"))]
    fn new(src: &str, realization: &str) -> PyResult<Self> {
        let r = realization_of(realization)?;
        let inner = parse::parse_poly(src, r.variables()).map_err(value_error)?;
        Ok(PyPoly { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.inner)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPoly {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPoly {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPoly {
            inner: &self.inner * &other.inner,
        }
    }

    fn __neg__(&self) -> Self {
        PyPoly {
            inner: -&self.inner,
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    /// Adams operation ψ_k: every variable exponent is scaled by k.
    fn adams(&self, k: u32) -> PyResult<Self> {
        if k == 0 {
            return Err(value_error("adams index must be >= 1"));
        }
        Ok(PyPoly {
            inner: adams_poly(&self.inner, k),
        })
    }

    /// σ-operation σ_n: the class of the n-th symmetric product.
    fn sigma(&self, n: u32) -> Self {
        PyPoly {
            inner: sigma_poly(&self.inner, n),
        }
    }

    /// Substitutes a one-term polynomial for a variable.
    fn substitute(&self, var: &str, image: &Self) -> PyResult<Self> {
        let v = var_of(var)?;
        self.inner
            .substitute_monomial(v, &image.inner)
            .map(|inner| PyPoly { inner })
            .map_err(value_error)
    }

    /// Evaluates at the given variable values (ints or `"p/q"` strings);
    /// returns the exact rational as a string.
    fn eval(&self, values: HashMap<String, RationalArg>) -> PyResult<String> {
        let mut assignment = BTreeMap::new();
        for (name, value) in values {
            assignment.insert(var_of(&name)?, rational_of(value)?);
        }
        self.inner
            .eval(&assignment)
            .map(|r| r.to_string())
            .map_err(value_error)
    }
}

/// A truncated power series in t with `LaurentPoly` coefficients.
#[pyclass(name = "Series", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySeries {
    inner: TruncatedSeries,
}

#[pymethods]
impl PySeries {
    /// Builds a series from coefficient strings c_0, c_1, …
    #[new]
    #[pyo3(signature = (coeffs, realization = "hodge"))]
    fn new(coeffs: Vec<String>, realization: &str) -> PyResult<Self> {
        if coeffs.is_empty() {
            return Err(value_error("at least one coefficient is required"));
        }
        let r = realization_of(realization)?;
        let parsed = coeffs
            .iter()
            .map(|src| parse::parse_poly(src, r.variables()).map_err(value_error))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PySeries {
            inner: TruncatedSeries::from_coeffs(parsed),
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series('{}')", self.inner)
    }

    fn __add__(&self, other: &Self) -> Self {
        PySeries {
            inner: &self.inner + &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PySeries {
            inner: &self.inner * &other.inner,
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn coefficient(&self, n: usize) -> PyResult<PyPoly> {
        if n > self.inner.order() {
            return Err(value_error(format!(
                "coefficient {n} beyond truncation order {}",
                self.inner.order()
            )));
        }
        Ok(PyPoly {
            inner: self.inner.coeff(n).clone(),
        })
    }

    fn truncated(&self, order: usize) -> Self {
        PySeries {
            inner: self.inner.truncated(order),
        }
    }

    /// Plethystic exponential (requires constant coefficient 0).
    fn pleth_exp(&self) -> PyResult<Self> {
        plethystic_exp(&self.inner)
            .map(|inner| PySeries { inner })
            .map_err(value_error)
    }

    /// Plethystic logarithm (requires constant coefficient 1).
    fn pleth_log(&self) -> PyResult<Self> {
        plethystic_log(&self.inner)
            .map(|inner| PySeries { inner })
            .map_err(value_error)
    }
}

fn variety(cls: &PyPoly, realization: &str, dim: u32) -> PyResult<stringy::VarietyInput> {
    let r = realization_of(realization)?;
    stringy::VarietyInput::new(r, cls.inner.clone(), dim).map_err(value_error)
}

/// Parses a polynomial in the given realization's variables.
#[pyfunction]
#[pyo3(signature = (src, realization = "hodge"))]
fn parse_poly(src: &str, realization: &str) -> PyResult<PyPoly> {
    PyPoly::new(src, realization)
}

/// Σ_n [X^(n)]_st t^n for a variety of dimension `dim` with class `cls`.
#[pyfunction]
fn stringy_series(
    cls: &PyPoly,
    realization: &str,
    dim: u32,
    order: usize,
) -> PyResult<PySeries> {
    let x = variety(cls, realization, dim)?;
    stringy::stringy_series(&x, order)
        .map(|inner| PySeries { inner })
        .map_err(value_error)
}

/// One coefficient [X^(n)]_st via the independent partition sum.
#[pyfunction]
fn stringy_coefficient(
    cls: &PyPoly,
    realization: &str,
    dim: u32,
    n: u32,
) -> PyResult<PyPoly> {
    let x = variety(cls, realization, dim)?;
    stringy::stringy_partition_sum(&x, n)
        .map(|inner| PyPoly { inner })
        .map_err(value_error)
}

/// Hilbert-scheme-of-points series of a surface (`dim` must be 2).
#[pyfunction]
fn hilbert_series(cls: &PyPoly, realization: &str, dim: u32, order: usize) -> PyResult<PySeries> {
    let x = variety(cls, realization, dim)?;
    stringy::hilbert_series(&x, order)
        .map(|inner| PySeries { inner })
        .map_err(value_error)
}

/// The stringy series of the class normalized by L^(d/2).
#[pyfunction]
fn normalized_stringy_series(
    cls: &PyPoly,
    realization: &str,
    dim: u32,
    order: usize,
) -> PyResult<PySeries> {
    let x = variety(cls, realization, dim)?;
    stringy::normalized_stringy_series(&x, order)
        .map(|inner| PySeries { inner })
        .map_err(value_error)
}

/// Π_{k>=1} (1 - t^k)^(-e), truncated at the given order.
#[pyfunction]
fn euler_product(e: i64, order: usize) -> PySeries {
    PySeries {
        inner: stringy::euler_product(e, order),
    }
}

/// All partitions of n, in decreasing lexicographic order.
#[pyfunction]
fn partitions(n: u32) -> Vec<Vec<u32>> {
    stringy::partitions(n)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// The Möbius function μ(k).
#[pyfunction]
fn mobius(k: u64) -> PyResult<i64> {
    if k == 0 {
        return Err(value_error("mobius is defined for k >= 1"));
    }
    Ok(i64::from(stringy_motives::lambda::mobius(k)))
}

/// Specialization u ↦ v (virtual Hodge to virtual Poincaré polynomial).
#[pyfunction]
fn hodge_to_poincare(cls: &PyPoly) -> PyResult<PyPoly> {
    realize::hodge_to_poincare(&cls.inner)
        .map(|inner| PyPoly { inner })
        .map_err(value_error)
}

/// Evaluation v ↦ 1 (virtual Poincaré polynomial to Euler number),
/// returned as an exact rational string.
#[pyfunction]
fn poincare_to_euler(cls: &PyPoly) -> PyResult<String> {
    realize::poincare_to_euler(&cls.inner)
        .map(|r| r.to_string())
        .map_err(value_error)
}

#[pymodule(name = "stringy_motives")]
fn bindings(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(parse_poly, m)?)?;
    m.add_function(wrap_pyfunction!(stringy_series, m)?)?;
    m.add_function(wrap_pyfunction!(stringy_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_stringy_series, m)?)?;
    m.add_function(wrap_pyfunction!(euler_product, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(mobius, m)?)?;
    m.add_function(wrap_pyfunction!(hodge_to_poincare, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_to_euler, m)?)?;
    Ok(())
}
