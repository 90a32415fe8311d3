use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::ln_gamma;
use super::orthopoly::{gegenbauer, gegenbauer_norm_sq};
use crate::error::{GfError, Result};

/// Associated Legendre P_l^m(x) for m >= 0, without the Condon-Shortley sign.
fn assoc_legendre(l: i64, m: i64, x: f64) -> f64 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= (2 * k - 1) as f64 * s;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = ((2 * ll - 1) as f64 * x * cur - (ll + m - 1) as f64 * prev) / (ll - m) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal Y_lm with the Condon-Shortley phase.
pub fn spherical_harmonic(l: i64, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    if l < 0 || m.abs() > l {
        return Err(GfError::Domain(format!("need |m| <= l, got l={l}, m={m}")));
    }
    let am = m.abs();
    let log_ratio = ln_gamma((l - am + 1) as f64) - ln_gamma((l + am + 1) as f64);
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * log_ratio.exp()).sqrt();
    let mag = norm * assoc_legendre(l, am, theta.cos());
    let y = Complex64::from_polar(mag, am as f64 * phi) * if am % 2 == 1 { -1.0 } else { 1.0 };
    Ok(if m < 0 {
        y.conj() * if am % 2 == 1 { -1.0 } else { 1.0 }
    } else {
        y
    })
}

/// Hyperspherical harmonic on S^{N-1} along the chain `mu = [l, mu_2, ..., mu_{N-1}]`
/// with `angles = [theta_1, ..., theta_{N-2}, phi]`. The last label is the
/// azimuthal m and may be negative.
pub fn hyperspherical_harmonic(mu: &[i64], angles: &[f64]) -> Result<Complex64> {
    let dim = mu.len() + 1;
    if dim < 2 || angles.len() != dim - 1 {
        return Err(GfError::Domain(format!(
            "{} labels need {} angles, got {}",
            mu.len(),
            dim - 1,
            angles.len()
        )));
    }
    let chain: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(i, &v)| if i + 1 == mu.len() { v.abs() } else { v })
        .collect();
    if chain.windows(2).any(|w| w[1] > w[0]) || chain.iter().any(|&v| v < 0) {
        return Err(GfError::Domain(format!("labels {mu:?} are not a descending chain")));
    }
    let m = mu[mu.len() - 1];
    let phi = angles[dim - 2];
    let mut value = 1.0 / (2.0 * PI).sqrt();
    for j in 1..=dim - 2 {
        let alpha = (dim - 1 - j) as f64 / 2.0;
        let (hi, lo) = (chain[j - 1], chain[j]);
        let lambda = alpha + lo as f64;
        let deg = (hi - lo) as u32;
        let theta = angles[j - 1];
        value *= gegenbauer(deg, lambda, theta.cos()) * theta.sin().powi(lo as i32) / gegenbauer_norm_sq(deg, lambda).sqrt();
    }
    Ok(Complex64::from_polar(value, m as f64 * phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y10_closed_form() {
        let y = spherical_harmonic(1, 0, 0.4, 1.0).unwrap();
        assert!((y.re - (3.0 / (4.0 * PI)).sqrt() * 0.4f64.cos()).abs() < 1e-14);
        let y11 = spherical_harmonic(1, 1, 0.4, 0.0).unwrap();
        assert!((y11.re + (3.0 / (8.0 * PI)).sqrt() * 0.4f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn three_dim_chain_matches_ylm_magnitude() {
        for (l, m) in [(2, 1), (3, -2), (4, 0)] {
            let a = spherical_harmonic(l, m, 0.7, 0.3).unwrap();
            let b = hyperspherical_harmonic(&[l, m], &[0.7, 0.3]).unwrap();
            assert!((a.norm() - b.norm()).abs() < 1e-13);
        }
    }
}
