use std::fmt;

use nalgebra::DMatrix;

use crate::error::{GfError, Result};
use crate::poly::Poly;

/// Signed reference `sign * u_{var+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedVar {
    pub sign: i8,
    pub var: usize,
}

/// Square matrix whose entries are signed copies of `u_1..u_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzMatrix {
    n: usize,
    entries: Vec<Vec<SignedVar>>,
}

// standard layouts: (sign, 1-based variable)
const H2: [[i8; 2]; 2] = [[1, -2], [2, 1]];
const H4: [[i8; 4]; 4] = [[1, -2, -3, -4], [2, 1, -4, 3], [3, 4, 1, -2], [4, -3, 2, 1]];
const H8: [[i8; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [-2, 1, 4, -3, 6, -5, -8, 7],
    [-3, -4, 1, 2, 7, 8, -5, -6],
    [-4, 3, -2, 1, 8, -7, 6, -5],
    [-5, -6, -7, -8, 1, 2, 3, 4],
    [-6, 5, -8, 7, -2, 1, -4, 3],
    [-7, 8, 5, -6, -3, 4, 1, -2],
    [-8, -7, 6, 5, -4, -3, 2, 1],
];

fn from_codes<const N: usize>(rows: &[[i8; N]; N]) -> HurwitzMatrix {
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|&c| SignedVar { sign: c.signum(), var: c.unsigned_abs() as usize - 1 }).collect())
        .collect();
    HurwitzMatrix { n: N, entries }
}

fn check_n(n: usize) -> Result<()> {
    if matches!(n, 2 | 4 | 8) {
        Ok(())
    } else {
        Err(GfError::Unsupported(format!("Hurwitz matrices exist for n in {{2, 4, 8}}, got {n}")))
    }
}

/// Cayley-Dickson product `(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))`.
pub fn cayley_dickson_mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let conj = |v: &[f64]| -> Vec<f64> { v.iter().enumerate().map(|(i, &t)| if i == 0 { t } else { -t }).collect() };
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cayley_dickson_mul(a, c);
    let db = cayley_dickson_mul(&conj(d), b);
    let da = cayley_dickson_mul(d, a);
    let bc = cayley_dickson_mul(b, &conj(c));
    ac.iter().zip(&db).map(|(p, q)| p - q).chain(da.iter().zip(&bc).map(|(p, q)| p + q)).collect()
}

impl HurwitzMatrix {
    /// The standard layouts for n = 2, 4, 8.
    pub fn standard(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(match n {
            2 => from_codes(&H2),
            4 => from_codes(&H4),
            _ => from_codes(&H8),
        })
    }

    /// Left multiplication by `u` in the Cayley-Dickson algebra of dimension n.
    pub fn doubling(n: usize) -> Result<Self> {
        check_n(n)?;
        let mut entries = vec![vec![SignedVar { sign: 0, var: 0 }; n]; n];
        for k in 0..n {
            for j in 0..n {
                let mut ek = vec![0.0; n];
                let mut ej = vec![0.0; n];
                ek[k] = 1.0;
                ej[j] = 1.0;
                let prod = cayley_dickson_mul(&ek, &ej);
                for (i, &v) in prod.iter().enumerate() {
                    if v != 0.0 {
                        entries[i][j] = SignedVar { sign: v.signum() as i8, var: k };
                    }
                }
            }
        }
        Ok(HurwitzMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> SignedVar {
        self.entries[i][j]
    }

    pub fn numeric(&self, u: &[f64]) -> Result<DMatrix<f64>> {
        if u.len() != self.n {
            return Err(GfError::Domain(format!("expected {} components, got {}", self.n, u.len())));
        }
        Ok(DMatrix::from_fn(self.n, self.n, |i, j| {
            let e = self.entries[i][j];
            f64::from(e.sign) * u[e.var]
        }))
    }

    /// `H^t H` as integer polynomials in `u`.
    pub fn gram(&self) -> Vec<Vec<Poly<i64>>> {
        let n = self.n;
        let lin = |e: SignedVar| Poly::<i64>::var(n, e.var).scale(&i64::from(e.sign));
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Poly::zero(n), |acc, k| acc.add(&lin(self.entries[k][i]).mul(&lin(self.entries[k][j]))))
                    })
                    .collect()
            })
            .collect()
    }

    /// Exact check of `H^t H = (sum u_i^2) I`.
    pub fn is_orthogonal_identity(&self) -> bool {
        let n = self.n;
        let r = (0..n).fold(Poly::<i64>::zero(n), |acc, k| acc.add(&Poly::var(n, k).pow(2)));
        let g = self.gram();
        (0..n).all(|i| (0..n).all(|j| if i == j { g[i][j] == r } else { g[i][j].is_zero() }))
    }

    /// Every row and column uses each variable exactly once.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.n;
        let full = |vars: Vec<usize>| {
            let mut v = vars;
            v.sort_unstable();
            v == (0..n).collect::<Vec<_>>()
        };
        (0..n).all(|i| full(self.entries[i].iter().map(|e| e.var).collect()))
            && (0..n).all(|j| full(self.entries.iter().map(|r| r[j].var).collect()))
            && self.entries.iter().flatten().all(|e| e.sign == 1 || e.sign == -1)
    }
}

impl fmt::Display for HurwitzMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> =
                row.iter().map(|e| format!("{}u{}", if e.sign < 0 { "-" } else { " " }, e.var + 1)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Numeric Hurwitz matrix with the standard layout.
pub fn hurwitz_matrix(n: usize, u: &[f64]) -> Result<DMatrix<f64>> {
    HurwitzMatrix::standard(n)?.numeric(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_h2() {
        let m = hurwitz_matrix(2, &[3.0, 5.0]).unwrap();
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[3.0, -5.0, 5.0, 3.0]));
        assert!(hurwitz_matrix(3, &[1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn octonion_norm_is_multiplicative() {
        let a = [0.3, -1.2, 0.7, 2.0, -0.4, 0.9, 1.1, -0.6];
        let b = [1.5, 0.2, -0.8, 0.1, 0.6, -1.3, 0.4, 0.9];
        let n2 = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>();
        let p = cayley_dickson_mul(&a, &b);
        assert!((n2(&p) - n2(&a) * n2(&b)).abs() < 1e-12);
    }
}
