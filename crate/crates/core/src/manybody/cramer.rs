use std::ops::{Add, Div, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{GfError, Result};

/// Scalars the elimination routines accept. `pivot_size` ranks pivot
/// candidates; exact fields only need it to be nonzero for nonzero values.
pub trait Field:
    Clone + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self>
{
    fn pivot_size(&self) -> f64;
    fn is_negligible(&self) -> bool;
}

impl Field for f64 {
    fn pivot_size(&self) -> f64 {
        self.abs()
    }
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-300
    }
}

impl Field for Rational {
    fn pivot_size(&self) -> f64 {
        // rationals whose float form underflows still rank above zero
        match self.abs().to_f64() {
            Some(v) if v > 0.0 => v,
            _ if self.is_zero() => 0.0,
            _ => f64::MIN_POSITIVE,
        }
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

/// Dense row-major square or rectangular matrix.
pub type Rows<T> = Vec<Vec<T>>;

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant<T: Field>(a: &Rows<T>) -> T {
    let n = a.len();
    let mut m = a.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = pivot_row(&m, col) else { return T::zero() };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det = det * m[col][col].clone();
        for r in col + 1..n {
            let f = m[r][col].clone() / m[col][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = m[r][c].clone() - f.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    det
}

fn pivot_row<T: Field>(m: &Rows<T>, col: usize) -> Option<usize> {
    let (best, size) = (col..m.len()).map(|r| (r, m[r][col].pivot_size())).fold((col, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    (size > 0.0 && !m[best][col].is_negligible()).then_some(best)
}

/// Solves A X = B for X (n x s) together with det A. Singular A is an error.
pub fn solve_with_det<T: Field>(a: &Rows<T>, b: &Rows<T>) -> Result<(Rows<T>, T)> {
    let n = a.len();
    let s = b.first().map_or(0, Vec::len);
    let mut m: Rows<T> = a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb).cloned().collect()).collect();
    let mut det = T::one();
    for col in 0..n {
        let p = pivot_row(&m, col).ok_or(GfError::Singular)?;
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det = det * piv.clone();
        for c in col..n + s {
            let v = m[col][c].clone() / piv.clone();
            m[col][c] = v;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..n + s {
                let v = m[r][c].clone() - f.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    Ok((m.into_iter().map(|row| row[n..].to_vec()).collect(), det))
}

/// Columns `b_1..b_s` (the columns of `b`) replace columns `positions[0..s]` of `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubstitutionQuery<T> {
    pub a: Rows<T>,
    pub b: Rows<T>,
    pub positions: Vec<usize>,
}

impl<T: Field> SubstitutionQuery<T> {
    pub fn new(a: Rows<T>, b: Rows<T>, positions: Vec<usize>) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(GfError::Domain("A must be square".into()));
        }
        if b.len() != n || b.iter().any(|r| r.len() != positions.len()) {
            return Err(GfError::Domain(format!("B must be {n} x {}", positions.len())));
        }
        if positions.len() > n || positions.iter().any(|&p| p >= n) || !positions.iter().all_unique() {
            return Err(GfError::Domain(format!("positions {positions:?} must be distinct and below {n}")));
        }
        Ok(Self { a, b, positions })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn s(&self) -> usize {
        self.positions.len()
    }

    /// The substituted matrix itself, for direct evaluation.
    pub fn substituted(&self) -> Rows<T> {
        let mut m = self.a.clone();
        for (k, &col) in self.positions.iter().enumerate() {
            for (row, brow) in m.iter_mut().zip(&self.b) {
                row[col] = brow[k].clone();
            }
        }
        m
    }
}

/// Solution matrix of A X = B read as x(k, i) = X[i][k], plus det A.
#[derive(Debug, Clone, PartialEq)]
pub struct CramerSolution<T> {
    pub x: Rows<T>,
    pub det_a: T,
}

impl<T: Field> CramerSolution<T> {
    pub fn solve(a: &Rows<T>, b: &Rows<T>) -> Result<Self> {
        let (x, det_a) = solve_with_det(a, b)?;
        Ok(Self { x, det_a })
    }

    /// det(A with b_k in column positions[k]) = det A * det[x(k, positions[l])].
    pub fn substituted_det(&self, positions: &[usize]) -> T {
        let minor: Rows<T> = (0..positions.len()).map(|k| positions.iter().map(|&i| self.x[i][k].clone()).collect()).collect();
        self.det_a.clone() * determinant(&minor)
    }
}

/// Substituted determinant via one solve and an s x s minor.
pub fn generalized_cramer<T: Field>(q: &SubstitutionQuery<T>) -> Result<T> {
    Ok(CramerSolution::solve(&q.a, &q.b)?.substituted_det(&q.positions))
}

/// Every increasing placement of b_1..b_s, sharing one solve.
pub fn generalized_cramer_all<T: Field>(a: &Rows<T>, b: &Rows<T>) -> Result<Vec<(Vec<usize>, T)>> {
    let sol = CramerSolution::solve(a, b)?;
    let s = b.first().map_or(0, Vec::len);
    Ok((0..a.len()).combinations(s).map(|pos| {
        let v = sol.substituted_det(&pos);
        (pos, v)
    }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn identity_single_column() {
        let a: Rows<Rational> = (0..3).map(|i| (0..3).map(|j| r((i == j) as i64)).collect()).collect();
        let b = vec![vec![r(1)], vec![r(2)], vec![r(3)]];
        let q = SubstitutionQuery::new(a, b, vec![1]).unwrap();
        assert_eq!(generalized_cramer(&q).unwrap(), r(2));
    }

    #[test]
    fn singular_rejected() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        let b = vec![vec![1.0], vec![0.0]];
        let q = SubstitutionQuery::new(a, b, vec![0]).unwrap();
        assert_eq!(generalized_cramer(&q), Err(GfError::Singular));
        assert_eq!(determinant(&q.a), 0.0);
    }
}
