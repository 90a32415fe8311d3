use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use super::bessel::bessel_j;
use super::gamma::{gamma, ln_gamma};
use super::harmonics::{hyperspherical_harmonic, spherical_harmonic};
use super::orthopoly::{gegenbauer, laguerre};
use crate::error::{GfError, Result};
use crate::numeric::{gauss_laguerre, integrate_adaptive, integrate_panels};

/// Bound state of the N-dimensional Coulomb problem (atomic units, Z = 1).
///
/// `labels` holds the angular chain below `l`: `[mu_2, ..., mu_{N-1}]` for
/// N >= 3 (just `[m]` when N = 3) and `[m]` with `|m| = l` when N = 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HydrogenState {
    dim: usize,
    n: i64,
    l: i64,
    labels: Vec<i64>,
}

impl HydrogenState {
    pub fn new(dim: usize, n: i64, l: i64, labels: Vec<i64>) -> Result<Self> {
        if dim < 2 {
            return Err(GfError::Domain(format!("dimension {dim} < 2")));
        }
        if l < 0 || n < l + 1 {
            return Err(GfError::Domain(format!("need n >= l + 1 >= 1, got n={n}, l={l}")));
        }
        let expect = if dim == 2 { 1 } else { dim - 2 };
        if labels.len() != expect {
            return Err(GfError::Domain(format!("N={dim} needs {expect} angular labels, got {}", labels.len())));
        }
        if dim == 2 && labels[0].abs() != l {
            return Err(GfError::Domain(format!("N=2 needs |m| = l, got m={}, l={l}", labels[0])));
        }
        let state = Self { dim, n, l, labels };
        // reuse the harmonic's own chain validation
        let probe = vec![0.3; dim - 1];
        hyperspherical_harmonic(&state.chain(), &probe)?;
        Ok(state)
    }

    /// Top of the angular chain: all lower labels zero (m = l when N = 2).
    pub fn top(dim: usize, n: i64, l: i64) -> Result<Self> {
        let labels = if dim == 2 { vec![l] } else { vec![0; dim.saturating_sub(2)] };
        Self::new(dim, n, l, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Inverse length scale 1/(n + (N-3)/2); the exponent is e^{-delta r}.
    pub fn delta(&self) -> f64 {
        1.0 / (self.n as f64 + (self.dim as f64 - 3.0) / 2.0)
    }

    pub fn energy(&self) -> f64 {
        -self.delta().powi(2) / 2.0
    }

    fn chain(&self) -> Vec<i64> {
        if self.dim == 2 {
            self.labels.clone()
        } else {
            std::iter::once(self.l).chain(self.labels.iter().copied()).collect()
        }
    }

    fn radial_degree(&self) -> u32 {
        (self.n - self.l - 1) as u32
    }

    /// Normalized radial function R(r), with the integral of R^2 r^{N-1} equal to one.
    pub fn radial_position(&self, r: f64) -> f64 {
        let d = self.delta();
        let nn = self.dim as f64;
        let k = self.radial_degree();
        let l = self.l as f64;
        let log_norm_sq = nn * (2.0 * d).ln() + ln_gamma(k as f64 + 1.0) + d.ln() - 2f64.ln() - ln_gamma(self.n as f64 + l + nn - 2.0);
        let x = 2.0 * d * r;
        (0.5 * log_norm_sq).exp() * x.powi(self.l as i32) * (-d * r).exp() * laguerre(k, 2.0 * l + nn - 2.0, x)
    }

    /// Normalized radial momentum amplitude of the Gegenbauer closed form, without the phase.
    pub fn radial_momentum(&self, p: f64) -> f64 {
        let d = self.delta();
        let nn = self.dim as f64;
        let k = self.radial_degree();
        let l = self.l as f64;
        let lambda = l + (nn - 1.0) / 2.0;
        let log_a_sq = (nn + 1.0) * d.ln() + ln_gamma(k as f64 + 1.0) + 2.0 * ln_gamma(lambda) + (4.0 * l + 2.0 * nn - 1.0) * 2f64.ln()
            - PI.ln()
            - ln_gamma(self.n as f64 + l + nn - 2.0);
        let s = p * p + d * d;
        (0.5 * log_a_sq).exp() * (d * p).powi(self.l as i32) / s.powf(l + (nn + 1.0) / 2.0) * gegenbauer(k, lambda, (p * p - d * d) / s)
    }

    /// Global phase of the momentum form: i^l in three dimensions, -i^l otherwise.
    pub fn momentum_phase(&self) -> Complex64 {
        let il = Complex64::i().powi(self.l as i32);
        if self.dim == 3 {
            il
        } else {
            -il
        }
    }

    /// Angular factor. Angles are `[phi]` (N=2), `[theta, phi]` (N=3) or
    /// `[theta_1, ..., theta_{N-2}, phi]`.
    pub fn angular(&self, angles: &[f64]) -> Result<Complex64> {
        if angles.len() != self.dim - 1 {
            return Err(GfError::Domain(format!("N={} needs {} angles, got {}", self.dim, self.dim - 1, angles.len())));
        }
        if self.dim == 3 {
            spherical_harmonic(self.l, self.labels[0], angles[0], angles[1])
        } else {
            hyperspherical_harmonic(&self.chain(), angles)
        }
    }
}

impl fmt::Display for HydrogenState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} n={} l={} labels={:?}", self.dim, self.n, self.l, self.labels)
    }
}

pub fn hydrogen_position_wf(s: &HydrogenState, r: f64, angles: &[f64]) -> Result<Complex64> {
    Ok(s.angular(angles)? * s.radial_position(r))
}

pub fn hydrogen_momentum_wf(s: &HydrogenState, p: f64, angles: &[f64]) -> Result<Complex64> {
    Ok(s.angular(angles)? * s.momentum_phase() * s.radial_momentum(p))
}

/// Radial norm in position space by Gauss-Laguerre quadrature in t = 2 delta r.
pub fn position_norm(s: &HydrogenState) -> f64 {
    let d = s.delta();
    let nodes = (s.n + s.l) as usize + s.dim + 8;
    let rule = gauss_laguerre(nodes, 0.0);
    let scale = 1.0 / (2.0 * d);
    rule.integrate(|t| {
        let r = t * scale;
        let v = s.radial_position(r);
        // weight e^{-t} is carried by the rule
        v * v * r.powi(s.dim as i32 - 1) * t.exp() * scale
    })
}

/// Radial norm in momentum space by adaptive quadrature after p = delta u / (1 - u).
pub fn momentum_norm(s: &HydrogenState) -> Result<f64> {
    let d = s.delta();
    integrate_adaptive(
        |u| {
            if u >= 1.0 {
                return 0.0;
            }
            let p = d * u / (1.0 - u);
            let v = s.radial_momentum(p);
            v * v * p.powi(s.dim as i32 - 1) * d / ((1.0 - u) * (1.0 - u))
        },
        0.0,
        1.0,
        1e-14,
        1e-12,
    )
}

/// N-dimensional radial Fourier transform of `f` in the angular channel `l`:
/// p^{1-N/2} times the integral of f(r) J_{l+N/2-1}(p r) r^{N/2} over [0, r_max].
pub fn hankel_transform<F: Fn(f64) -> f64>(f: F, dim: usize, l: i64, p: f64, r_max: f64) -> Result<f64> {
    let half = dim as f64 / 2.0;
    let nu = l as f64 + half - 1.0;
    if p == 0.0 {
        if l > 0 {
            return Ok(0.0);
        }
        let c = 1.0 / (2f64.powf(nu) * gamma(nu + 1.0));
        let edges = panel_edges(r_max, r_max / 32.0);
        return integrate_panels(|r| c * f(r) * r.powi(dim as i32 - 1), &edges, 1e-15, 1e-11);
    }
    // one panel per half period of the Bessel oscillation
    let step = (PI / p).min(r_max / 32.0);
    let edges = panel_edges(r_max, step);
    let pref = p.powf(1.0 - half);
    integrate_panels(|r| pref * f(r) * bessel_j(nu, p * r) * r.powf(half), &edges, 1e-15, 1e-11)
}

fn panel_edges(r_max: f64, step: f64) -> Vec<f64> {
    let count = (r_max / step).ceil().max(1.0) as usize;
    (0..=count).map(|i| (i as f64 * step).min(r_max)).collect()
}

/// Cutoff beyond which R(r) r^{N/2} is negligible.
pub fn radial_cutoff(s: &HydrogenState) -> f64 {
    (45.0 + 3.0 * (s.n + s.l) as f64 + 3.0 * s.dim as f64) / s.delta()
}

/// |radial momentum amplitude| computed by the Hankel route from R(r).
pub fn fourier_momentum_oracle(s: &HydrogenState, p: f64) -> Result<f64> {
    hankel_transform(|r| s.radial_position(r), s.dim, s.l, p, radial_cutoff(s)).map(f64::abs)
}

/// Ratio of the normalized three-dimensional radial constant to
/// (2/n^2) sqrt((n-l-1)!/(n+l)!), the constant of the (n+l)!-scaled Laguerre
/// convention once that factorial is absorbed.
pub fn laguerre_scaled_norm_ratio_3d(n: i64, l: i64) -> Result<f64> {
    let s = HydrogenState::top(3, n, l)?;
    let scaled = 2.0 / (n * n) as f64 * (0.5 * (ln_gamma((n - l) as f64) - ln_gamma((n + l + 1) as f64))).exp();
    // R(r) = C x^l e^{-x/2} L(x), recover C at a point where L does not vanish
    let r = 1e-9;
    let x = 2.0 * s.delta() * r;
    let c = s.radial_position(r) / (x.powi(l as i32) * (-x / 2.0).exp() * laguerre((n - l - 1) as u32, (2 * l + 1) as f64, x));
    Ok(c / scaled)
}
