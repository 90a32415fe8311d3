use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{GfError, Result};
use crate::numeric::gauss_hermite;

/// Gaussian integral against the Gegenbauer generating function.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianIdentity {
    pub integral: Complex64,
    pub closed_form: f64,
    pub residual: f64,
    /// Monte-Carlo standard error; zero for quadrature.
    pub std_error: f64,
}

/// Matrix `A_case(x)`; `x` has 3, 4 or 6 components.
pub fn clifford_matrix(case: usize, x: &[f64]) -> Result<DMatrix<Complex64>> {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let want = match case {
        1 => 3,
        2 => 4,
        3 => 6,
        _ => return Err(GfError::Unsupported(format!("case {case} is not one of 1, 2, 3"))),
    };
    if x.len() != want {
        return Err(GfError::Domain(format!("case {case} needs {want} components, got {}", x.len())));
    }
    Ok(match case {
        1 => DMatrix::from_row_slice(2, 2, &[c(x[2], x[1]), c(0.0, x[0]), c(0.0, x[0]), c(x[2], -x[1])]),
        2 => DMatrix::from_row_slice(2, 2, &[c(x[3], x[2]), c(x[1], x[0]), c(-x[1], x[0]), c(x[3], -x[2])]),
        _ => {
            let [x1, x2, x3, x4, x5, x6] = [x[0], x[1], x[2], x[3], x[4], x[5]];
            let z = c(0.0, 0.0);
            DMatrix::from_row_slice(
                4,
                4,
                &[
                    c(x6, x5),
                    z,
                    c(-x1, x2),
                    c(-x4, x3),
                    z,
                    c(x6, x5),
                    c(-x4, -x3),
                    c(x1, x2),
                    c(x1, x2),
                    c(x4, -x3),
                    c(x6, -x5),
                    z,
                    c(x4, x3),
                    c(-x1, x2),
                    z,
                    c(x6, -x5),
                ],
            )
        }
    })
}

/// Compares `int dmu exp(alpha q_A)` with `(1 - 2 alpha x_last + alpha^2 r^2)^(-m)`.
///
/// Case 1 is a real quadratic form in `u` in R^2 (m = 1/2, Gauss-Hermite
/// tensor rule); cases 2 and 3 are Hermitian forms in complex `z` in C^2 and
/// C^4 (m = 1 and 2, Monte Carlo with `samples` draws).
pub fn gegenbauer_gaussian_identity(case: usize, alpha: f64, x: &[f64], samples: usize, seed: u64) -> Result<GaussianIdentity> {
    let a = clifford_matrix(case, x)?;
    let r2: f64 = x.iter().map(|t| t * t).sum();
    if alpha.abs() * r2.sqrt() >= 0.9 {
        return Err(GfError::Divergent(format!("|alpha| |x| = {} must stay below 0.9", alpha.abs() * r2.sqrt())));
    }
    let last = x[x.len() - 1];
    let m = match case {
        1 => 0.5,
        2 => 1.0,
        _ => 2.0,
    };
    let closed_form = (1.0 - 2.0 * alpha * last + alpha * alpha * r2).powf(-m);
    let (integral, std_error) = if case == 1 {
        let rule = gauss_hermite(80);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&u1, &w1) in rule.nodes.iter().zip(&rule.weights) {
            for (&u2, &w2) in rule.nodes.iter().zip(&rule.weights) {
                let q = a[(0, 0)] * u1 * u1 + (a[(0, 1)] + a[(1, 0)]) * u1 * u2 + a[(1, 1)] * u2 * u2;
                acc += (q * alpha).exp() * (w1 * w2);
            }
        }
        (acc / std::f64::consts::PI, 0.0)
    } else {
        if samples < 2 {
            return Err(GfError::Domain("Monte Carlo needs at least two samples".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = a.nrows();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut sum_sq = 0.0;
        let mut z = vec![Complex64::new(0.0, 0.0); dim];
        for _ in 0..samples {
            for zi in z.iter_mut() {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                *zi = Complex64::new(re * s, im * s);
            }
            let mut q = Complex64::new(0.0, 0.0);
            for i in 0..dim {
                for j in 0..dim {
                    q += z[i].conj() * a[(i, j)] * z[j];
                }
            }
            let v = (q * alpha).exp();
            sum += v;
            sum_sq += v.norm_sqr();
        }
        let n = samples as f64;
        let mean = sum / n;
        let var = (sum_sq / n - mean.norm_sqr()).max(0.0);
        (mean, (var / n).sqrt())
    };
    let residual = (integral - Complex64::new(closed_form, 0.0)).norm();
    Ok(GaussianIdentity { integral, closed_form, residual, std_error })
}
