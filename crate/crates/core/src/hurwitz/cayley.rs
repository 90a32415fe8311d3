use nalgebra::DMatrix;

use crate::error::{GfError, Result};

use super::matrix::HurwitzMatrix;

/// Skew matrix `S_n(u)` for n = 3 (from `u_2..u_4`) or n = 7 (the
/// off-diagonal part of the lower-right block of `H_8`).
pub fn skew_matrix(n: usize, u: &[f64]) -> Result<DMatrix<f64>> {
    match n {
        3 => {
            if u.len() != 4 {
                return Err(GfError::Domain(format!("n = 3 needs 4 components, got {}", u.len())));
            }
            Ok(DMatrix::from_row_slice(3, 3, &[0.0, u[1], u[2], -u[1], 0.0, u[3], -u[2], -u[3], 0.0]))
        }
        7 => {
            let h = HurwitzMatrix::standard(8)?.numeric(u)?;
            Ok(DMatrix::from_fn(7, 7, |i, j| if i == j { 0.0 } else { h[(i + 1, j + 1)] }))
        }
        _ => Err(GfError::Unsupported(format!("Cayley rotations are built for n in {{3, 7}}, got {n}"))),
    }
}

/// `O_n(u) = |u|^2 (u_1 I - S_n)(u_1 I + S_n)^{-1}`, evaluated by inversion.
pub fn cayley_rotation(n: usize, u: &[f64]) -> Result<DMatrix<f64>> {
    let s = skew_matrix(n, u)?;
    let r2: f64 = u.iter().map(|t| t * t).sum();
    let id = DMatrix::<f64>::identity(n, n);
    let den = &id * u[0] + &s;
    let lu = den.clone().lu();
    let det = lu.determinant();
    let scale = den.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
    if det.abs() <= 1e-12 * scale.powi(n as i32) {
        return Err(GfError::Singular);
    }
    let inv = lu.try_inverse().ok_or(GfError::Singular)?;
    Ok((&id * u[0] - &s) * inv * r2)
}

/// Polynomial form `|u|^2 I - 2 u_1 S + 2 S^2`.
pub fn cayley_closed_form(n: usize, u: &[f64]) -> Result<DMatrix<f64>> {
    let s = skew_matrix(n, u)?;
    let r2: f64 = u.iter().map(|t| t * t).sum();
    Ok(DMatrix::<f64>::identity(n, n) * r2 - &s * (2.0 * u[0]) + &s * &s * 2.0)
}

/// The 3 x 3 Cayley rotation written out entry by entry.
pub fn cayley3_explicit(u: &[f64; 4]) -> DMatrix<f64> {
    let [u1, u2, u3, u4] = *u;
    DMatrix::from_row_slice(
        3,
        3,
        &[
            u1 * u1 - u2 * u2 - u3 * u3 + u4 * u4,
            -2.0 * (u2 * u1 + u3 * u4),
            -2.0 * (u3 * u1 - u2 * u4),
            2.0 * (u2 * u1 - u4 * u3),
            u1 * u1 - u2 * u2 + u3 * u3 - u4 * u4,
            -2.0 * (u1 * u4 + u2 * u3),
            2.0 * (u3 * u1 + u2 * u4),
            2.0 * (u1 * u4 - u2 * u3),
            u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_unit_u1() {
        let o = cayley_rotation(3, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!((o - DMatrix::<f64>::identity(3, 3)).norm() < 1e-15);
        assert!(matches!(cayley_rotation(3, &[0.0, 1.0, 0.0, 0.0]), Err(GfError::Singular)));
    }
}
