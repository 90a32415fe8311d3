use num_rational::BigRational;

use crate::error::{GfError, Result};
use crate::poly::Poly;

use super::matrix::HurwitzMatrix;

/// Quadratic map `R^N -> R^n` with `sum x_i^2 = (sum u_i^2)^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadMap {
    source_dim: usize,
    components: Vec<Poly<i64>>,
}

fn sq_sum(n: usize, range: std::ops::Range<usize>) -> Poly<i64> {
    range.fold(Poly::zero(n), |acc, k| acc.add(&Poly::var(n, k).pow(2)))
}

impl QuadMap {
    /// `x1 = u1^2 - u2^2`, `x2 = 2 u1 u2`.
    pub fn levi_civita() -> Self {
        let u = |i| Poly::<i64>::var(2, i);
        QuadMap { source_dim: 2, components: vec![u(0).pow(2).sub(&u(1).pow(2)), u(0).mul(&u(1)).scale(&2)] }
    }

    /// `x = 2(u1 u3 + u2 u4)`, `y = 2(u4 u1 - u3 u2)`, `z = u1^2 + u2^2 - u3^2 - u4^2`.
    pub fn kustaanheimo_stiefel() -> Self {
        let u = |i| Poly::<i64>::var(4, i);
        let x = u(0).mul(&u(2)).add(&u(1).mul(&u(3))).scale(&2);
        let y = u(3).mul(&u(0)).sub(&u(2).mul(&u(1))).scale(&2);
        let z = sq_sum(4, 0..2).sub(&sq_sum(4, 2..4));
        QuadMap { source_dim: 4, components: vec![x, y, z] }
    }

    /// `R^8 -> R^5`: `x_{1..4} = 2 H_4(u_1..u_4) (u_5..u_8)`, `x_5 = r_1 - r_2`.
    pub fn octonionic() -> Self {
        let h = HurwitzMatrix::standard(4).expect("n = 4 is supported");
        let mut components = Vec::with_capacity(5);
        for i in 0..4 {
            let mut c = Poly::zero(8);
            for j in 0..4 {
                let e = h.entry(i, j);
                c = c.add(&Poly::var(8, e.var).mul(&Poly::var(8, 4 + j)).scale(&(2 * i64::from(e.sign))));
            }
            components.push(c);
        }
        components.push(sq_sum(8, 0..4).sub(&sq_sum(8, 4..8)));
        QuadMap { source_dim: 8, components }
    }

    /// The map for `(n, N)` in {(2,2), (3,4), (5,8)}.
    pub fn for_pair(n: usize, big_n: usize) -> Result<Self> {
        match (n, big_n) {
            (2, 2) => Ok(QuadMap::levi_civita()),
            (3, 4) => Ok(QuadMap::kustaanheimo_stiefel()),
            (5, 8) => Ok(QuadMap::octonionic()),
            _ => Err(GfError::Unsupported(format!("no quadratic map for (n, N) = ({n}, {big_n})"))),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly<i64>] {
        &self.components
    }

    pub fn eval(&self, u: &[f64]) -> Result<Vec<f64>> {
        if u.len() != self.source_dim {
            return Err(GfError::Domain(format!("expected {} components, got {}", self.source_dim, u.len())));
        }
        Ok(self.components.iter().map(|c| c.eval_with(u, |&k| k as f64)).collect())
    }

    pub fn eval_exact(&self, u: &[BigRational]) -> Result<Vec<BigRational>> {
        if u.len() != self.source_dim {
            return Err(GfError::Domain(format!("expected {} components, got {}", self.source_dim, u.len())));
        }
        Ok(self.components.iter().map(|c| c.eval_with(u, |&k| BigRational::from_integer(k.into()))).collect())
    }

    /// Exact polynomial check of `sum x_i^2 = (sum u_i^2)^2`.
    pub fn norm_identity_holds(&self) -> bool {
        let n = self.source_dim;
        let lhs = self.components.iter().fold(Poly::zero(n), |acc, c| acc.add(&c.mul(c)));
        lhs == sq_sum(n, 0..n).pow(2)
    }
}

pub fn ks_transform(u: [f64; 4]) -> [f64; 3] {
    let v = QuadMap::kustaanheimo_stiefel().eval(&u).expect("four components");
    [v[0], v[1], v[2]]
}

pub fn ks_transform_exact(u: &[BigRational; 4]) -> [BigRational; 3] {
    let v = QuadMap::kustaanheimo_stiefel().eval_exact(u).expect("four components");
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

pub fn laplacian(p: &Poly<f64>) -> Poly<f64> {
    (0..p.nvars()).fold(Poly::zero(p.nvars()), |acc, i| acc.add(&p.derivative(i).derivative(i)))
}

/// `|Lap_u f(x(u)) - 4 |u|^2 (Lap_x f)(x(u))|` with both Laplacians taken
/// symbolically.
pub fn laplacian_pullback_residual(n: usize, big_n: usize, f: &Poly<f64>, u: &[f64]) -> Result<f64> {
    let map = QuadMap::for_pair(n, big_n)?;
    if f.nvars() != n {
        return Err(GfError::Domain(format!("f has {} variables, expected {n}", f.nvars())));
    }
    if f.degree() > 6 {
        return Err(GfError::Domain(format!("degree {} exceeds 6", f.degree())));
    }
    let x = map.eval(u)?;
    let subs: Vec<Poly<f64>> = map.components.iter().map(|c| c.map_coeffs(|&k| k as f64)).collect();
    let pulled = f.compose(&subs);
    let lhs = laplacian(&pulled).eval(u);
    let r2: f64 = u.iter().map(|t| t * t).sum();
    let rhs = 4.0 * r2 * laplacian(f).eval(&x);
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ks_examples() {
        assert_eq!(ks_transform([1.0, 0.0, 0.0, 0.0]), [0.0, 0.0, 1.0]);
        assert_eq!(ks_transform([1.0, 0.0, 1.0, 0.0]), [2.0, 0.0, 0.0]);
    }

    #[test]
    fn maps_preserve_norms() {
        for m in [QuadMap::levi_civita(), QuadMap::kustaanheimo_stiefel(), QuadMap::octonionic()] {
            assert!(m.norm_identity_holds());
        }
    }
}
