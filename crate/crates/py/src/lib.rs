//! Python bindings. Exact values come back as `(exact_string, float)` pairs;
//! complex numbers as `(re, im)` tuples.

use gfkit::manybody::{boson_expansion_coeffs, lipkin_spectrum, LipkinModel};
use gfkit::oscillator::{ho_propagator, OscillatorParams};
use gfkit::special::HydrogenState;
use gfkit::unitary::{gelfand_enumerate, weyl_dimension, IrrepLabel};
use gfkit::wigner::{wigner_3j, wigner_6j_gf, wigner_9j, NineJLabel, SixJLabel, ThreeJLabel};
use gfkit::{GfError, SqrtRational};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: GfError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pair(v: SqrtRational) -> (String, f64) {
    (v.to_string(), v.to_f64())
}

#[pyfunction]
fn three_j(two_j: [i64; 3], two_m: [i64; 3]) -> PyResult<(String, f64)> {
    let label = ThreeJLabel::new(two_j, two_m).map_err(py_err)?;
    Ok(pair(wigner_3j(&label)))
}

#[pyfunction]
fn six_j(two_j: [i64; 6]) -> PyResult<(String, f64)> {
    let label = SixJLabel::new(two_j).map_err(py_err)?;
    wigner_6j_gf(&label).map(pair).map_err(py_err)
}

#[pyfunction]
fn nine_j(two_j: [[i64; 3]; 3]) -> PyResult<(String, f64)> {
    let label = NineJLabel::new(two_j).map_err(py_err)?;
    Ok(pair(wigner_9j(&label)))
}

#[pyfunction]
fn gelfand_dim(h: Vec<i64>) -> PyResult<u64> {
    let d = weyl_dimension(&IrrepLabel::new(h).map_err(py_err)?);
    d.to_u64().ok_or_else(|| PyOverflowError::new_err(d.to_string()))
}

#[pyfunction]
fn gelfand_patterns(h: Vec<i64>) -> PyResult<Vec<String>> {
    let label = IrrepLabel::new(h).map_err(py_err)?;
    Ok(gelfand_enumerate(&label).iter().map(|p| p.to_string()).collect())
}

/// Closed-form momentum radial function of the top state of (dim, n, l).
#[pyfunction]
#[pyo3(signature = (n, l, p, dim = 3))]
fn hydrogen_radial_momentum(n: i64, l: i64, p: Vec<f64>, dim: usize) -> PyResult<Vec<f64>> {
    let s = HydrogenState::top(dim, n, l).map_err(py_err)?;
    Ok(p.iter().map(|&x| s.radial_momentum(x)).collect())
}

/// Mehler kernel at complex time `t = (re, im)`.
#[pyfunction]
#[pyo3(signature = (x, xp, t, mass = 1.0, omega = 1.0, hbar = 1.0))]
fn oscillator_propagator(x: f64, xp: f64, t: (f64, f64), mass: f64, omega: f64, hbar: f64) -> PyResult<(f64, f64)> {
    let params = OscillatorParams::new(mass, omega, hbar).map_err(py_err)?;
    let k = ho_propagator(&params, x, xp, Complex64::new(t.0, t.1)).map_err(py_err)?;
    Ok((k.re, k.im))
}

#[pyfunction]
#[pyo3(signature = (n, v, e = 1.0))]
fn lipkin_energies(n: u32, v: f64, e: f64) -> PyResult<Vec<f64>> {
    Ok(lipkin_spectrum(&LipkinModel::new(n, e, v).map_err(py_err)?))
}

#[pyfunction]
fn boson_coefficients(k_max: usize) -> Vec<f64> {
    boson_expansion_coeffs(k_max)
}

#[pymodule]
fn gfkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(three_j, m)?)?;
    m.add_function(wrap_pyfunction!(six_j, m)?)?;
    m.add_function(wrap_pyfunction!(nine_j, m)?)?;
    m.add_function(wrap_pyfunction!(gelfand_dim, m)?)?;
    m.add_function(wrap_pyfunction!(gelfand_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(hydrogen_radial_momentum, m)?)?;
    m.add_function(wrap_pyfunction!(oscillator_propagator, m)?)?;
    m.add_function(wrap_pyfunction!(lipkin_energies, m)?)?;
    m.add_function(wrap_pyfunction!(boson_coefficients, m)?)?;
    Ok(())
}
