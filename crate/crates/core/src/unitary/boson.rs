use std::collections::BTreeMap;

use itertools::Itertools;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bfr::{minor_name, minor_subsets, phi_factors, Param};
use super::gelfand::GelfandPattern;
use crate::arith::{binomial, factorial, SqrtRational};
use crate::error::{GfError, Result};
use crate::poly::Poly;

/// `P_n(1)`, the value of the generating-function coefficient at unit minors.
///
/// Closed form `prod_{l<n} prod_{k<l} C(h_{k,l} - h_{k+1,l}, R_l^k)`, which
/// reproduces the n = 3, 4, 5 expressions in terms of `L` and `R`.
pub fn pn1(n: usize, pattern: &GelfandPattern) -> Result<BigRational> {
    if !(2..=5).contains(&n) {
        return Err(GfError::Unsupported(format!("P_n(1) is only available for n in 2..=5, got {n}")));
    }
    if pattern.n() != n {
        return Err(GfError::Domain(format!("pattern is for U({}), not U({n})", pattern.n())));
    }
    let mut out = BigInt::one();
    for l in 2..n {
        for k in 1..l {
            out *= BigInt::from(binomial(pattern.h(k, l) - pattern.h(k + 1, l), pattern.big_r(l, k)));
        }
    }
    Ok(BigRational::from_integer(out))
}

/// Lowest-row-first variable layout for the parameters `x(l,m)`, `y(l,m)`
/// with `2 <= l <= n-1`, `1 <= m < l`.
fn param_index(n: usize) -> BTreeMap<Param, usize> {
    let mut out = BTreeMap::new();
    for l in 2..n {
        for m in 1..l {
            let k = out.len();
            out.insert(Param::x(l, m), k);
            out.insert(Param::y(l, m), k + 1);
        }
    }
    out
}

/// Boson polynomial of a Gel'fand state in the minors of the matrix `z`.
#[derive(Clone, Debug)]
pub struct BosonPolynomial {
    n: usize,
    minors: Vec<Vec<usize>>,
    poly: Poly<BigInt>,
    norm_sq: BigInt,
}

impl BosonPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Column sets of the minors, in the order used by exponent vectors.
    pub fn minors(&self) -> &[Vec<usize>] {
        &self.minors
    }

    pub fn minor_names(&self) -> Vec<String> {
        self.minors.iter().map(|c| minor_name(c)).collect()
    }

    /// Unnormalized integer terms.
    pub fn raw(&self) -> &Poly<BigInt> {
        &self.poly
    }

    /// Fock-space norm squared of the unnormalized polynomial in the entries
    /// of `z`: `sum |c_a|^2 a!`.
    pub fn raw_norm_sq(&self) -> &BigInt {
        &self.norm_sq
    }

    /// `1 / sqrt(raw_norm_sq)`.
    pub fn normalization(&self) -> SqrtRational {
        SqrtRational::sqrt_of(BigRational::new(BigInt::one(), self.norm_sq.clone())).expect("positive norm")
    }

    /// Normalized terms as (coefficient, exponent vector over the minors).
    pub fn terms(&self) -> Vec<(SqrtRational, Vec<u32>)> {
        let nrm = self.normalization();
        self.poly
            .terms()
            .map(|(e, c)| (nrm.scale(&BigRational::from_integer(c.clone())), e.clone()))
            .collect()
    }

    /// Normalized polynomial evaluated at an `n x n` complex matrix.
    pub fn eval(&self, z: &DMatrix<Complex64>) -> Complex64 {
        let vals: Vec<Complex64> = self.minors.iter().map(|cols| complex_minor(z, cols)).collect();
        let raw = self.poly.eval_with(&vals, |c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0));
        raw * self.normalization().to_f64()
    }
}

/// Determinant of rows `1..=k`, columns `cols` (1-based) of `z`.
pub fn complex_minor(z: &DMatrix<Complex64>, cols: &[usize]) -> Complex64 {
    let k = cols.len();
    let sub = DMatrix::from_fn(k, k, |r, c| z[(r, cols[c] - 1)]);
    sub.determinant()
}

/// The minor on `cols` as an integer polynomial in the `n^2` entries of `z`
/// (entry `(r, c)` is variable `r*n + c`).
fn minor_poly(n: usize, cols: &[usize]) -> Poly<BigInt> {
    let k = cols.len();
    let mut out = Poly::zero(n * n);
    for perm in (0..k).permutations(k) {
        let mut inv = 0;
        for i in 0..k {
            for j in i + 1..k {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut e = vec![0u32; n * n];
        for (r, &p) in perm.iter().enumerate() {
            e[r * n + cols[p] - 1] += 1;
        }
        out.add_term(e, if inv % 2 == 0 { BigInt::one() } else { -BigInt::one() });
    }
    out
}

fn fock_norm_sq(p: &Poly<BigInt>) -> BigInt {
    p.terms()
        .map(|(e, c)| {
            let w: BigInt = e.iter().map(|&k| BigInt::from(factorial(k as u64))).product();
            c * c * w
        })
        .sum()
}

fn to_u32(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| GfError::Domain(format!("{what} = {v} is negative")))
}

/// Boson polynomial for any pattern with `n <= 5`.
///
/// Expands the generating function row by row: the sum over minors of size
/// `k` avoiding column n is raised to `R_n^k`, the sum over minors of size
/// `k` containing column n is raised to `L_n^k`, and the coefficient of the
/// parameter monomial of the lower pattern is kept.
pub fn boson_polynomial(p: &GelfandPattern) -> Result<BosonPolynomial> {
    let n = p.n();
    if n > 5 {
        return Err(GfError::Unsupported(format!("boson polynomials are only built for n <= 5, got {n}")));
    }
    let minors = minor_subsets(n);
    let minor_pos: BTreeMap<Vec<usize>, usize> = minors.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let params = param_index(n);
    let nm = minors.len();
    let nvars = nm + params.len();

    let mut target = vec![0u32; params.len()];
    for l in 2..n {
        for m in 1..l {
            target[params[&Param::x(l, m)]] = to_u32(p.big_l(l, m), "L")?;
            target[params[&Param::y(l, m)]] = to_u32(p.big_r(l, m), "R")?;
        }
    }
    let limit: Vec<Option<u32>> = (0..nvars).map(|i| if i < nm { None } else { Some(target[i - nm]) }).collect();

    // sum of Delta_{S + extra} * phi(S) over S in [n-1] with |S| = size
    let factor = |size: usize, with_last: bool| -> Poly<BigInt> {
        let mut f = Poly::zero(nvars);
        for s in (1..n).combinations(size) {
            let mut bits = vec![false; n - 1];
            for &c in &s {
                bits[c - 1] = true;
            }
            let mut cols = s.clone();
            if with_last {
                cols.push(n);
            }
            let mut e = vec![0u32; nvars];
            e[minor_pos[&cols]] = 1;
            for par in phi_factors(&bits) {
                e[nm + params[&par]] += 1;
            }
            f.add_term(e, BigInt::one());
        }
        f
    };

    let mut acc = Poly::one(nvars);
    for k in 1..n {
        let r = to_u32(p.big_r(n, k), "R")?;
        acc = acc.mul_bounded(&factor(k, false).pow_bounded(r, Some(&limit)), Some(&limit));
    }
    for k in 1..=n {
        let l = to_u32(p.big_l(n, k), "L")?;
        acc = acc.mul_bounded(&factor(k - 1, true).pow_bounded(l, Some(&limit)), Some(&limit));
    }

    let mut poly = Poly::zero(nm);
    for (e, c) in acc.terms() {
        if e[nm..] == target[..] {
            poly.add_term(e[..nm].to_vec(), c.clone());
        }
    }
    if poly.is_zero() {
        return Err(GfError::Domain(format!("pattern {p} produced an empty polynomial")));
    }

    let subs: Vec<Poly<BigInt>> = minors.iter().map(|c| minor_poly(n, c)).collect();
    let norm_sq = fock_norm_sq(&poly.compose(&subs));
    debug_assert!(norm_sq.is_positive());
    Ok(BosonPolynomial { n, minors, poly, norm_sq })
}

pub fn u3_boson_polynomial(p: &GelfandPattern) -> Result<BosonPolynomial> {
    if p.n() != 3 {
        return Err(GfError::Domain(format!("expected a U(3) pattern, got U({})", p.n())));
    }
    boson_polynomial(p)
}

pub fn u4_boson_polynomial(p: &GelfandPattern) -> Result<BosonPolynomial> {
    if p.n() != 4 {
        return Err(GfError::Domain(format!("expected a U(4) pattern, got U({})", p.n())));
    }
    boson_polynomial(p)
}

/// Sum of the raw coefficients, i.e. the polynomial at unit minors with
/// parameters set to one.
pub fn raw_coefficient_sum(b: &BosonPolynomial) -> BigInt {
    b.raw().terms().map(|(_, c)| c.clone()).fold(BigInt::zero(), |a, c| a + c)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> GelfandPattern {
        s.parse().unwrap()
    }

    #[test]
    fn pn1_small() {
        assert_eq!(pn1(3, &pat("2 0 0 / 2 0 / 1")).unwrap(), BigRational::from_integer(2.into()));
        assert!(matches!(pn1(6, &pat("0 0 0 0 0 0 / 0 0 0 0 0 / 0 0 0 0 / 0 0 0 / 0 0 / 0")), Err(GfError::Unsupported(_))));
    }

    #[test]
    fn fundamental_states() {
        let b = u3_boson_polynomial(&pat("2 0 0 / 2 0 / 2")).unwrap();
        let t = b.terms();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].1, vec![2, 0, 0, 0, 0, 0, 0]);
        let b = u4_boson_polynomial(&pat("1 1 0 0 / 1 1 0 / 1 1 / 1")).unwrap();
        assert_eq!(b.terms()[0].1[4], 1);
    }

    #[test]
    fn mixed_u3_state() {
        let b = u3_boson_polynomial(&pat("2 1 0 / 2 0 / 1")).unwrap();
        let names = b.minor_names();
        let mut got: Vec<String> = b
            .raw()
            .terms()
            .map(|(e, c)| {
                let mono: Vec<&str> =
                    e.iter().zip(&names).filter(|(k, _)| **k > 0).map(|(_, n)| n.as_str()).collect();
                format!("{c}*{}", mono.join("*"))
            })
            .collect();
        got.sort();
        assert_eq!(got, vec!["1*D1*D23", "1*D2*D13"]);
    }
}
