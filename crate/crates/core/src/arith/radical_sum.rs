use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::SqrtRational;
use crate::error::{GfError, Result};

/// Exact finite sum of square roots, grouped by squarefree kernel.
///
/// Roots of distinct squarefree integers are linearly independent over the
/// rationals, so the sum is zero iff every group coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl RadicalSum {
    pub fn new() -> Self {
        RadicalSum::default()
    }

    pub fn add(&mut self, v: &SqrtRational) {
        if v.is_zero() {
            return;
        }
        let k = v.kernel();
        let c = v.kernel_coeff();
        let slot = self.terms.entry(k.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_rational(&mut self, q: &BigRational) {
        self.add(&SqrtRational::from_rational(q.clone()));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(kernel, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sum as a single radical; fails if two or more kernels survive.
    pub fn to_sqrt_rational(&self) -> Result<SqrtRational> {
        match self.terms.len() {
            0 => Ok(SqrtRational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().expect("one term");
                Ok(SqrtRational::from_squarefree(c.clone(), k.clone(), BigUint::one()))
            }
            n => Err(GfError::Unsupported(format!("sum has {n} independent radicals"))),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * k.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

impl FromIterator<SqrtRational> for RadicalSum {
    fn from_iter<I: IntoIterator<Item = SqrtRational>>(iter: I) -> Self {
        let mut s = RadicalSum::new();
        for v in iter {
            s.add(&v);
        }
        s
    }
}
