use std::f64::consts::PI;

use num_complex::Complex64;

use super::wavefunction::{ho_wavefunction_x, OscillatorParams};
use crate::error::{GfError, Result};

/// Relative imaginary tilt t -> t (1 - i eps) applied to purely real times.
pub const DEFAULT_TILT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelKind {
    FreeOscillator,
    /// Charged 2-D oscillator; `omega_c` is the Larmor frequency and
    /// `params.omega` the bare confinement frequency.
    Magnetic { omega_c: f64 },
}

/// A kernel at fixed (complex) time. Imaginary time t = -i beta gives
/// <x| e^{-beta H / hbar} |x'>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorKernel {
    pub kind: KernelKind,
    pub params: OscillatorParams,
    pub time: Complex64,
}

impl PropagatorKernel {
    pub fn eval(&self, r1: &[f64], r2: &[f64]) -> Result<Complex64> {
        match self.kind {
            KernelKind::FreeOscillator => {
                if r1.len() != 1 || r2.len() != 1 {
                    return Err(GfError::Domain("one-dimensional kernel takes scalar points".into()));
                }
                ho_propagator(&self.params, r1[0], r2[0], self.time)
            }
            KernelKind::Magnetic { omega_c } => {
                if r1.len() != 2 || r2.len() != 2 {
                    return Err(GfError::Domain("magnetic kernel takes planar points".into()));
                }
                magnetic_propagator(&self.params, omega_c, [r1[0], r1[1]], [r2[0], r2[1]], self.time)
            }
        }
    }
}

// Returns (sin, cos) of omega t after the tilt, rejecting caustics.
fn phase(omega: f64, t: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
    let bare = (t * omega).sin();
    if bare.norm() < 1e-12 {
        return Err(GfError::Caustic);
    }
    let t = if t.im == 0.0 { t * Complex64::new(1.0, -DEFAULT_TILT) } else { t };
    let a = t * omega;
    Ok((a.sin(), a.cos(), t))
}

/// Mehler/Feynman kernel of the 1-D oscillator.
pub fn ho_propagator(p: &OscillatorParams, x: f64, xp: f64, t: Complex64) -> Result<Complex64> {
    let (s, c, _) = phase(p.omega, t)?;
    let i = Complex64::i();
    let mw = p.mass * p.omega;
    // principal branch, continuous from imaginary time where i sin is positive
    let pref = (mw / (2.0 * PI * p.hbar * i * s)).sqrt();
    let expo = i * mw / (2.0 * p.hbar * s) * ((x * x + xp * xp) * c - 2.0 * x * xp);
    Ok(pref * expo.exp())
}

/// Kernel of H = H_0 - omega_c L_z with H_0 isotropic at omega = sqrt(omega_0^2 + omega_c^2).
pub fn magnetic_propagator(p: &OscillatorParams, omega_c: f64, r1: [f64; 2], r2: [f64; 2], t: Complex64) -> Result<Complex64> {
    let omega = (p.omega * p.omega + omega_c * omega_c).sqrt();
    let (s, c, t) = phase(omega, t)?;
    let i = Complex64::i();
    let mw = p.mass * omega;
    let theta = t * omega_c;
    let sq = r1[0] * r1[0] + r1[1] * r1[1] + r2[0] * r2[0] + r2[1] * r2[1];
    let dot = r1[0] * r2[0] + r1[1] * r2[1];
    let wedge = r1[0] * r2[1] - r1[1] * r2[0];
    let pref = mw / (2.0 * PI * i * p.hbar * s);
    let expo = i * mw / p.hbar * (c / (2.0 * s) * sq - theta.cos() / s * dot - theta.sin() / s * wedge);
    Ok(pref * expo.exp())
}

/// Truncated eigen-expansion sum over n <= n_max of u_n(x) u_n(x') e^{-beta omega (n + 1/2)}.
pub fn mehler_eigen_sum(p: &OscillatorParams, x: f64, xp: f64, beta: f64, n_max: u32) -> f64 {
    (0..=n_max)
        .map(|n| ho_wavefunction_x(p, n, x) * ho_wavefunction_x(p, n, xp) * (-beta * p.omega * (n as f64 + 0.5)).exp())
        .sum()
}

/// Truncated sum of e^{-beta E / hbar} over E = hbar omega (2 n + |l| + 1) - hbar omega_c l
/// with 2n + |l| <= quanta_max.
pub fn magnetic_spectral_trace(p: &OscillatorParams, omega_c: f64, beta: f64, quanta_max: u32) -> f64 {
    let omega = (p.omega * p.omega + omega_c * omega_c).sqrt();
    let mut total = 0.0;
    for quanta in 0..=quanta_max as i64 {
        for l in (-quanta..=quanta).step_by(2) {
            total += (-beta * (omega * (quanta as f64 + 1.0) - omega_c * l as f64)).exp();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_value_at_unit_beta() {
        let p = OscillatorParams::default();
        let k = ho_propagator(&p, 0.0, 0.0, Complex64::new(0.0, -1.0)).unwrap();
        assert!((k.re - 1.0 / (2.0 * PI * 1f64.sinh()).sqrt()).abs() < 1e-14);
        assert!(k.im.abs() < 1e-15);
    }

    #[test]
    fn caustic_rejected() {
        let p = OscillatorParams::default();
        assert_eq!(ho_propagator(&p, 0.1, 0.2, Complex64::new(PI, 0.0)), Err(GfError::Caustic));
        assert!(ho_propagator(&p, 0.1, 0.2, Complex64::new(0.7, 0.0)).is_ok());
    }
}
