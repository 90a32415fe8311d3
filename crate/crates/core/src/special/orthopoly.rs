use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gamma::ln_gamma;
use crate::arith::Rational;
use crate::error::{GfError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Laguerre(f64),
    Gegenbauer(f64),
    Hermite,
    Legendre,
}

/// A classical orthogonal polynomial of fixed degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyFamily {
    family: Family,
    degree: u32,
}

impl PolyFamily {
    pub fn new(family: Family, degree: u32) -> Result<Self> {
        match family {
            Family::Laguerre(a) if !(a > -1.0) => {
                return Err(GfError::Domain(format!("Laguerre parameter {a} must exceed -1")));
            }
            Family::Gegenbauer(a) if !(a > -0.5) => {
                return Err(GfError::Domain(format!("Gegenbauer parameter {a} must exceed -1/2")));
            }
            _ => {}
        }
        Ok(Self { family, degree })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Laguerre(a) => write!(f, "L_{}^{}", self.degree, a),
            Family::Gegenbauer(a) => write!(f, "C_{}^{}", self.degree, a),
            Family::Hermite => write!(f, "H_{}", self.degree),
            Family::Legendre => write!(f, "P_{}", self.degree),
        }
    }
}

/// Evaluate by the three-term recurrence.
pub fn poly_eval(p: &PolyFamily, x: f64) -> f64 {
    let n = p.degree;
    match p.family {
        Family::Laguerre(a) => laguerre(n, a, x),
        Family::Gegenbauer(a) => gegenbauer(n, a, x),
        Family::Hermite => hermite(n, x),
        Family::Legendre => legendre(n, x),
    }
}

pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn gegenbauer(n: u32, alpha: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let k = k as f64;
        let next = (2.0 * (k + alpha) * x * cur - (k + 2.0 * alpha - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial.
pub fn hermite(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub fn legendre(n: u32, x: f64) -> f64 {
    gegenbauer(n, 0.5, x)
}

/// Weighted norm: integral of (1-x^2)^(alpha-1/2) C_n^alpha(x)^2 over [-1, 1].
pub fn gegenbauer_norm_sq(n: u32, alpha: f64) -> f64 {
    let n = n as f64;
    let log = (1.0 - 2.0 * alpha) * 2f64.ln() + ln_gamma(n + 2.0 * alpha) - ln_gamma(n + 1.0) - 2.0 * ln_gamma(alpha);
    PI * log.exp() / (n + alpha)
}

/// Exact power-basis coefficients of L_n^alpha, lowest degree first.
pub fn laguerre_coefficients(n: u32, alpha: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        // binomial(n + alpha, n - k) / k!
        let mut c = Rational::one();
        for j in 1..=(n - k) {
            c *= (alpha + Rational::from_integer(BigInt::from(k + j))) / Rational::from_integer(BigInt::from(j));
        }
        for j in 1..=k {
            c /= Rational::from_integer(BigInt::from(j));
        }
        out.push(if k % 2 == 1 { -c } else { c });
    }
    out
}

/// Derivative of a power-basis coefficient vector.
pub fn derivative_coefficients(c: &[Rational]) -> Vec<Rational> {
    if c.len() <= 1 {
        return vec![Rational::zero()];
    }
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, v)| v * Rational::from_integer(BigInt::from(k)))
        .collect()
}
