use num_complex::Complex64;

use super::orthopoly::{gegenbauer, legendre};
use crate::error::{GfError, Result};

pub const DEFAULT_GENFUNC_ORDER: usize = 80;

/// Generating-function identities checked by partial sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenFunc {
    /// sum r^l P_l(c) = (1 - 2 r c + r^2)^{-1/2}
    Legendre { r: f64, cos_theta: f64 },
    /// sum over j of r^{2j} chi_j(R) for the rotation R(phi, theta, psi)
    Character { r: f64, phi: f64, theta: f64, psi: f64 },
    /// sum r^m C_m^alpha(t) = (1 - 2 r t + r^2)^{-alpha}
    Gegenbauer { alpha: f64, r: f64, t: f64 },
}

impl GenFunc {
    fn ratio(&self) -> f64 {
        match *self {
            GenFunc::Legendre { r, .. } | GenFunc::Character { r, .. } | GenFunc::Gegenbauer { r, .. } => r,
        }
    }

    pub fn closed_form(&self) -> f64 {
        match *self {
            GenFunc::Legendre { r, cos_theta } => (1.0 - 2.0 * r * cos_theta + r * r).powf(-0.5),
            GenFunc::Character { r, phi, theta, psi } => 1.0 / (1.0 - 2.0 * r * half_trace(phi, theta, psi) + r * r),
            GenFunc::Gegenbauer { alpha, r, t } => (1.0 - 2.0 * r * t + r * r).powf(-alpha),
        }
    }

    /// Partial sum through `order` (for characters, through 2j = order).
    pub fn partial_sum(&self, order: usize) -> f64 {
        match *self {
            GenFunc::Legendre { r, cos_theta } => (0..=order).map(|l| r.powi(l as i32) * legendre(l as u32, cos_theta)).sum(),
            GenFunc::Gegenbauer { alpha, r, t } => (0..=order).map(|m| r.powi(m as i32) * gegenbauer(m as u32, alpha, t)).sum(),
            GenFunc::Character { r, phi, theta, psi } => {
                // eigenvalues of the SU(2) matrix are e^{+-i w/2}; chi_j sums e^{i 2m w/2}
                let half_w = half_trace(phi, theta, psi).clamp(-1.0, 1.0).acos();
                (0..=order)
                    .map(|two_j| {
                        let chi: Complex64 = (0..=two_j)
                            .map(|k| Complex64::from_polar(1.0, (2.0 * k as f64 - two_j as f64) * half_w))
                            .sum();
                        r.powi(two_j as i32) * chi.re
                    })
                    .sum()
            }
        }
    }
}

// cos(w/2) for the rotation with Euler angles (phi, theta, psi): half the SU(2) trace.
fn half_trace(phi: f64, theta: f64, psi: f64) -> f64 {
    (theta / 2.0).cos() * ((phi + psi) / 2.0).cos()
}

/// |partial sum - closed form|.
pub fn genfunc_residual(kind: &GenFunc, order: usize) -> Result<f64> {
    let r = kind.ratio();
    if !(r.abs() < 1.0) {
        return Err(GfError::Divergent(format!("|r| = {} must be below 1", r.abs())));
    }
    Ok((kind.partial_sum(order) - kind.closed_form()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ratio_is_exact() {
        let g = GenFunc::Gegenbauer { alpha: 2.0, r: 0.0, t: 0.3 };
        assert_eq!(genfunc_residual(&g, DEFAULT_GENFUNC_ORDER).unwrap(), 0.0);
    }
}
