use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::arith::HalfInt;
use crate::error::{GfError, Result};
use crate::numeric::gauss_hermite;
use crate::special::{laguerre, ln_gamma};

/// Mass, angular frequency and reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        if !(mass > 0.0 && omega > 0.0 && hbar > 0.0) {
            return Err(GfError::Domain(format!("mass, omega, hbar must be positive, got {mass}, {omega}, {hbar}")));
        }
        Ok(Self { mass, omega, hbar })
    }

    /// Inverse oscillator length sqrt(m omega / hbar).
    pub fn lambda(&self) -> f64 {
        (self.mass * self.omega / self.hbar).sqrt()
    }
}

/// Normalized u_n(q) in the dimensionless coordinate, via the stable
/// recurrence for normalized Hermite functions.
pub fn ho_wavefunction(n: u32, q: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-q * q / 2.0).exp();
    for k in 0..n {
        let k = k as f64;
        let next = (2.0 / (k + 1.0)).sqrt() * q * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// u_n(x) = lambda^{1/2} u_n(lambda x), normalized in x.
pub fn ho_wavefunction_x(p: &OscillatorParams, n: u32, x: f64) -> f64 {
    let l = p.lambda();
    l.sqrt() * ho_wavefunction(n, l * x)
}

/// Sum over n of z^n / sqrt(n!) u_n(q) in closed form.
pub fn ho_generating_function(z: Complex64, q: f64) -> Complex64 {
    PI.powf(-0.25) * (SQRT_2 * q * z - q * q / 2.0 - z * z / 2.0).exp()
}

/// Cylindrical state with 2j quanta and L_z = 2m:
/// s sqrt(lambda^2/pi) sqrt((j-|m|)!/(j+|m|)!) e^{-t/2} L_{j-|m|}^{2|m|}(t) (lambda rho)^{2|m|} e^{-2 i m phi},
/// t = (lambda rho)^2, with s = (-1)^{2|m|} for m < 0 so that the states are
/// exactly the coefficients of the two-variable generating function.
pub fn cylindrical_wavefunction(j: HalfInt, m: HalfInt, lambda: f64, rho: f64, phi: f64) -> Result<Complex64> {
    check_jm(j, m)?;
    if !(lambda > 0.0) {
        return Err(GfError::Domain(format!("lambda must be positive, got {lambda}")));
    }
    let am = m.abs();
    let radial_deg = (j - am).as_int().expect("checked integer") as u32;
    let two_am = am.doubled();
    let log_ratio = ln_gamma((j - am).to_f64() + 1.0) - ln_gamma((j + am).to_f64() + 1.0);
    let t = (lambda * rho).powi(2);
    let sign = if m.doubled() < 0 && two_am % 2 == 1 { -1.0 } else { 1.0 };
    let mag = sign * lambda / PI.sqrt() * (0.5 * log_ratio).exp() * (-t / 2.0).exp() * laguerre(radial_deg, two_am as f64, t) * (lambda * rho).powi(two_am as i32);
    Ok(Complex64::from_polar(1.0, -(m.doubled() as f64) * phi) * mag)
}

fn check_jm(j: HalfInt, m: HalfInt) -> Result<()> {
    if j.doubled() < m.abs().doubled() || !(j - m.abs()).is_integer() {
        return Err(GfError::Domain(format!("need j >= |m| with j - |m| integral, got j={j}, m={m}")));
    }
    Ok(())
}

fn binomial_f64(n: i64, k: i64) -> f64 {
    if k < 0 || k > n {
        return 0.0;
    }
    (ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)).exp().round()
}

/// <Phi_{jm} | u_{nx} u_{ny}> from expanding
/// (-1)^{j-m} z1^{j+m} z2^{j-m} / sqrt((j+m)!(j-m)!) with
/// z1 = (t_x + i t_y)/sqrt 2, z2 = (t_x - i t_y)/sqrt 2.
pub fn cartesian_cylindrical_overlap(nx: u32, ny: u32, j: HalfInt, m: HalfInt) -> Result<Complex64> {
    check_jm(j, m)?;
    if i64::from(nx + ny) != j.doubled() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let a = (j + m).as_int().expect("integral") ;
    let b = (j - m).as_int().expect("integral");
    let i = Complex64::i();
    let mut coeff = Complex64::new(0.0, 0.0);
    // t_y^p from the first factor, t_y^q from the second, p + q = ny
    for p in 0..=(ny as i64).min(a) {
        let q = ny as i64 - p;
        if q > b {
            continue;
        }
        coeff += i.powi(p as i32) * (-i).powi(q as i32) * (binomial_f64(a, p) * binomial_f64(b, q));
    }
    let log_scale = 0.5 * (ln_gamma(nx as f64 + 1.0) + ln_gamma(ny as f64 + 1.0) - ln_gamma(a as f64 + 1.0) - ln_gamma(b as f64 + 1.0))
        - (a + b) as f64 / 2.0 * 2f64.ln();
    let sign = if b % 2 == 0 { 1.0 } else { -1.0 };
    Ok(coeff * sign * log_scale.exp())
}

/// |integral of e^{alpha conj(z)} e^{beta z} dmu(z) - e^{alpha beta}| with the
/// Gaussian measure e^{-|z|^2} d^2z / pi, by a tensor Gauss-Hermite rule.
pub fn fock_measure_identity(alpha: Complex64, beta: Complex64, nodes: usize) -> f64 {
    let rule = gauss_hermite(nodes);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
        for (&y, &wy) in rule.nodes.iter().zip(&rule.weights) {
            let z = Complex64::new(x, y);
            acc += (alpha * z.conj() + beta * z).exp() * (wx * wy);
        }
    }
    (acc / PI - (alpha * beta).exp()).norm()
}
