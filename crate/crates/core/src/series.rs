//! Sparse multivariate power series with integer coefficients, truncated to
//! the monomials dividing a fixed target monomial.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{GfError, Result};

const FIELD_BITS: u32 = 10;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;
/// Largest exponent per variable. Two bits of headroom per field keep sums of
/// two in-box keys carry-free and leave a guard bit for the box test.
pub const MAX_EXPONENT: u32 = (1 << (FIELD_BITS - 2)) - 1;
pub const MAX_VARS: usize = (128 / FIELD_BITS) as usize;

fn guard_mask(nvars: usize) -> u128 {
    (0..nvars).fold(0u128, |m, i| m | (1u128 << (FIELD_BITS * i as u32 + FIELD_BITS - 1)))
}

/// Exponent vector packed into a `u128`, ten bits per variable.
pub type Monomial = u128;

pub fn pack(exps: &[u32]) -> Result<Monomial> {
    if exps.len() > MAX_VARS {
        return Err(GfError::Unsupported(format!("{} variables exceeds {MAX_VARS}", exps.len())));
    }
    let mut key = 0u128;
    for (i, &e) in exps.iter().enumerate() {
        if e > MAX_EXPONENT {
            return Err(GfError::Unsupported(format!("exponent {e} exceeds {MAX_EXPONENT}")));
        }
        key |= (e as u128) << (FIELD_BITS * i as u32);
    }
    Ok(key)
}

pub fn unpack(key: Monomial, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| ((key >> (FIELD_BITS * i as u32)) & FIELD_MASK) as u32).collect()
}

/// Series modulo the ideal of monomials not dividing `bound`.
#[derive(Clone, Debug)]
pub struct BoxSeries {
    nvars: usize,
    bound: Vec<u32>,
    guarded: u128,
    guard: u128,
    terms: HashMap<Monomial, BigInt>,
}

impl BoxSeries {
    pub fn new(bound: &[u32]) -> Result<Self> {
        let packed = pack(bound)?;
        let guard = guard_mask(bound.len());
        Ok(BoxSeries {
            nvars: bound.len(),
            bound: bound.to_vec(),
            guarded: packed | guard,
            guard,
            terms: HashMap::new(),
        })
    }

    pub fn constant(bound: &[u32], c: BigInt) -> Result<Self> {
        let mut s = BoxSeries::new(bound)?;
        s.add_term(0, c);
        Ok(s)
    }

    /// Every field of `key` is at most the bound. Fields of `key` may reach
    /// twice `MAX_EXPONENT`; the guard bit survives exactly when no field exceeds.
    #[inline]
    fn fits(&self, key: Monomial) -> bool {
        key & self.guard == 0 && (self.guarded - key) & self.guard == self.guard
    }

    fn empty_like(&self) -> BoxSeries {
        BoxSeries {
            nvars: self.nvars,
            bound: self.bound.clone(),
            guarded: self.guarded,
            guard: self.guard,
            terms: HashMap::new(),
        }
    }

    /// Adds `c * x^key`; terms outside the box are dropped.
    pub fn add_term(&mut self, key: Monomial, c: BigInt) {
        if c.is_zero() || !self.fits(key) {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, key: Monomial) -> BigInt {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &BoxSeries) -> BoxSeries {
        let mut out = self.empty_like();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = ka + kb;
                if out.fits(k) {
                    *out.terms.entry(k).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// `2 - self`.
    fn two_minus(&self) -> BoxSeries {
        let mut out = self.empty_like();
        for (k, c) in &self.terms {
            out.terms.insert(*k, -c);
        }
        out.add_term(0, BigInt::from(2));
        out
    }

    /// Inverse of a series with constant term 1 by Newton iteration
    /// `h <- h (2 - g h)`. `min_degree` is a lower bound on the total degree of
    /// every non-constant monomial of `self`; it fixes the iteration count.
    pub fn inverse_unit(&self, min_degree: u32) -> Result<BoxSeries> {
        if self.coeff(0) != BigInt::one() {
            return Err(GfError::Domain("series inverse needs constant term 1".into()));
        }
        let total: u32 = self.bound.iter().sum();
        let mut h = BoxSeries::constant(&self.bound, BigInt::one())?;
        // the error 1 - g h has order >= min_degree * 2^k after k steps
        let mut order = min_degree.max(1) as u64;
        while order <= total as u64 {
            h = h.mul(&self.mul(&h).two_minus());
            order *= 2;
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - x - y) has coefficient C(a+b, a) at x^a y^b
        let bound = [4, 3];
        let mut g = BoxSeries::constant(&bound, BigInt::one()).unwrap();
        g.add_term(pack(&[1, 0]).unwrap(), BigInt::from(-1));
        g.add_term(pack(&[0, 1]).unwrap(), BigInt::from(-1));
        let h = g.inverse_unit(1).unwrap();
        assert_eq!(h.coeff(pack(&[4, 3]).unwrap()), BigInt::from(35));
        assert_eq!(h.coeff(pack(&[2, 1]).unwrap()), BigInt::from(3));
        assert_eq!(h.len(), 20);
    }

    #[test]
    fn pack_round_trip() {
        let e = [3, 0, 255, 7];
        assert_eq!(unpack(pack(&e).unwrap(), 4), e.to_vec());
        assert!(pack(&[256]).is_err());
    }
}
