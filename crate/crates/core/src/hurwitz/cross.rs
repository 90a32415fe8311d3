use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{GfError, Result};

/// Cross-product matrix: `V_3` as in the inertia-tensor construction,
/// `V_7` from the lower-right block of the standard octonionic layout.
pub fn v_matrix(n: usize, x: &[f64]) -> Result<DMatrix<f64>> {
    if x.len() != n {
        return Err(GfError::Domain(format!("expected {n} components, got {}", x.len())));
    }
    match n {
        3 => Ok(DMatrix::from_row_slice(3, 3, &[0.0, x[2], -x[1], -x[2], 0.0, x[0], x[1], -x[0], 0.0])),
        7 => {
            // (sign, 1-based index), 0 on the diagonal
            const V7: [[i8; 7]; 7] = [
                [0, 7, -6, -5, 4, 3, -2],
                [-7, 0, -5, 6, 3, -4, 1],
                [6, 5, 0, 7, -2, -1, -4],
                [5, -6, -7, 0, -1, 2, 3],
                [-4, -3, 2, 1, 0, 7, -6],
                [-3, 4, 1, -2, -7, 0, 5],
                [2, -1, 4, -3, 6, -5, 0],
            ];
            Ok(DMatrix::from_fn(7, 7, |i, j| {
                let c = V7[i][j];
                if c == 0 {
                    0.0
                } else {
                    f64::from(c.signum()) * x[c.unsigned_abs() as usize - 1]
                }
            }))
        }
        _ => Err(GfError::Unsupported(format!("cross products exist for n in {{3, 7}}, got {n}"))),
    }
}

/// `a x b`: right-handed in 3-D, `V_7(a) b` in 7-D.
pub fn cross_product(n: usize, a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    if b.len() != n {
        return Err(GfError::Domain(format!("expected {n} components, got {}", b.len())));
    }
    let v = v_matrix(n, a)?;
    let bv = nalgebra::DVector::from_column_slice(b);
    let out = if n == 3 { -(v * bv) } else { v * bv };
    Ok(out.iter().copied().collect())
}

/// Residuals of the cube identity and the exponential formula.
#[derive(Clone, Debug, PartialEq)]
pub struct VReport {
    /// `|V^3 + |x|^2 V|`
    pub cube_residual: f64,
    /// `|exp(-i theta L) - (1 - i sin(theta) L - (1 - cos(theta)) L^2)|` with
    /// the Hermitian generator `L = i V` of the unit vector.
    pub exp_residual: f64,
    /// `exp(theta V)` for the unit vector, a rotation.
    pub rotation: DMatrix<f64>,
}

pub fn v_matrix_properties(n: usize, x: &[f64], theta: f64) -> Result<VReport> {
    let v = v_matrix(n, x)?;
    let r2: f64 = x.iter().map(|t| t * t).sum();
    let cube_residual = (&v * &v * &v + &v * r2).norm();
    let unit = if r2 > 0.0 { v / r2.sqrt() } else { v };
    let i = Complex64::i();
    let l = unit.map(|t| i * t);
    let id = DMatrix::<Complex64>::identity(n, n);
    let lhs = (&l * Complex64::new(0.0, -theta)).exp();
    let rhs = &id - &l * (i * theta.sin()) - &l * &l * Complex64::from(1.0 - theta.cos());
    let exp_residual = (&lhs - &rhs).norm();
    let rotation = lhs.map(|c| c.re);
    Ok(VReport { cube_residual, exp_residual, rotation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_products() {
        assert_eq!(cross_product(3, &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]).unwrap(), vec![0.0, 0.0, 1.0]);
        let e = |k: usize| (0..7).map(|i| if i == k { 1.0 } else { 0.0 }).collect::<Vec<f64>>();
        let mut want = vec![0.0; 7];
        want[6] = -1.0;
        assert_eq!(cross_product(7, &e(0), &e(1)).unwrap(), want);
    }

    #[test]
    fn quarter_turn_about_z() {
        let r = v_matrix_properties(3, &[0.0, 0.0, 1.0], std::f64::consts::FRAC_PI_2).unwrap();
        assert!(r.cube_residual < 1e-12 && r.exp_residual < 1e-12);
        // x -> -y under exp(theta V)
        let want = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!((r.rotation - want).norm() < 1e-12);
    }
}
