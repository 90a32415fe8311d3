use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::{squarefree_split, DEFAULT_TRIAL_BOUND};
use crate::error::{GfError, Result};

/// Exact value `coeff * sqrt(radicand)` with a rational coefficient and a
/// non-negative rational radicand.
///
/// Canonical form: the radicand `r/s` has squarefree, coprime `r` and `s`;
/// a prime with odd exponent in the squared value sits in `r` when that
/// exponent is positive and in `s` when it is negative. Zero is `0 * sqrt(1)`.
/// With this rule equal values have equal fields, so `==` is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    coeff: BigRational,
    radicand: BigRational,
}

fn ratio(n: BigUint, d: BigUint) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn uabs(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational { coeff: BigRational::zero(), radicand: BigRational::one() }
    }

    pub fn one() -> Self {
        SqrtRational::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            return SqrtRational::zero();
        }
        SqrtRational { coeff: q, radicand: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        SqrtRational::from_rational(BigRational::from_integer(n.into()))
    }

    /// Canonicalises `coeff * sqrt(radicand)`; factorises the radicand.
    pub fn new(coeff: BigRational, radicand: BigRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(GfError::Domain(format!("negative radicand {radicand}")));
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(SqrtRational::zero());
        }
        let (ra, ca) = squarefree_split(&uabs(radicand.numer()), DEFAULT_TRIAL_BOUND);
        let (rb, cb) = squarefree_split(&uabs(radicand.denom()), DEFAULT_TRIAL_BOUND);
        let c = coeff * ratio(ra, rb);
        Ok(SqrtRational::from_squarefree(c, ca, cb))
    }

    /// `sqrt(q)` for a non-negative rational.
    pub fn sqrt_of(q: BigRational) -> Result<Self> {
        SqrtRational::new(BigRational::one(), q)
    }

    /// Builds the canonical form from `coeff * sqrt(r / s)` where `r` and `s`
    /// are already squarefree and coprime. Only gcds are needed.
    pub fn from_squarefree(coeff: BigRational, r: BigUint, s: BigUint) -> Self {
        if coeff.is_zero() {
            return SqrtRational::zero();
        }
        let mut c = coeff;
        let mut r = r;
        let mut s = s;
        let g = r.gcd(&uabs(c.denom()));
        if !g.is_one() {
            r /= &g;
            s *= &g;
            c *= BigRational::from_integer(BigInt::from(g));
        }
        let h = s.gcd(&uabs(c.numer()));
        if !h.is_one() {
            s /= &h;
            r *= &h;
            c /= BigRational::from_integer(BigInt::from(h));
        }
        SqrtRational { coeff: c, radicand: ratio(r, s) }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.coeff.is_zero() {
            0
        } else if self.coeff.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    /// The squarefree integer `k` with `self = q * sqrt(k)` for rational `q`.
    pub fn kernel(&self) -> BigUint {
        uabs(self.radicand.numer()) * uabs(self.radicand.denom())
    }

    /// Rational `q` with `self = q * sqrt(kernel)`.
    pub fn kernel_coeff(&self) -> BigRational {
        &self.coeff / BigRational::from_integer(self.radicand.denom().clone())
    }

    /// The exact square.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * &self.radicand
    }

    pub fn abs(&self) -> Self {
        SqrtRational { coeff: self.coeff.abs(), radicand: self.radicand.clone() }
    }

    /// Rounds numerator and denominator of the squared value to doubles, then
    /// one division and one square root.
    pub fn to_f64(&self) -> f64 {
        if self.coeff.is_zero() {
            return 0.0;
        }
        let num = uabs(self.coeff.numer()).pow(2) * uabs(self.radicand.numer());
        let den = uabs(self.coeff.denom()).pow(2) * uabs(self.radicand.denom());
        // keep both inside the double range; the common shift is exact
        let excess = num.bits().max(den.bits()).saturating_sub(1000);
        let excess = excess - excess % 2;
        let (n, d) = (num >> excess, den >> excess);
        let nf = n.to_f64().unwrap_or(f64::INFINITY);
        let df = d.to_f64().unwrap_or(f64::INFINITY);
        let mag = if df == 0.0 { f64::INFINITY } else { (nf / df).sqrt() };
        if self.coeff.is_negative() {
            -mag
        } else {
            mag
        }
    }

    /// Sum of two values whose radicands share the same squarefree kernel.
    pub fn add_same_radicand(&self, other: &SqrtRational) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let k = self.kernel();
        if k != other.kernel() {
            return Err(GfError::Unsupported(format!(
                "adding radicals with different radicands {} and {}",
                self.radicand, other.radicand
            )));
        }
        let c = self.kernel_coeff() + other.kernel_coeff();
        Ok(SqrtRational::from_squarefree(c, k, BigUint::one()))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (r, s) = (uabs(self.radicand.numer()), uabs(self.radicand.denom()));
        Some(SqrtRational::from_squarefree(self.coeff.recip(), s, r))
    }

    /// Multiplies by a rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return SqrtRational::zero();
        }
        let (r, s) = (uabs(self.radicand.numer()), uabs(self.radicand.denom()));
        SqrtRational::from_squarefree(&self.coeff * q, r, s)
    }
}

/// Returns the canonical form of `v`; idempotent.
pub fn canonicalize(v: &SqrtRational) -> Result<SqrtRational> {
    SqrtRational::new(v.coeff.clone(), v.radicand.clone())
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        if self.is_zero() || rhs.is_zero() {
            return SqrtRational::zero();
        }
        let (r1, s1) = (uabs(self.radicand.numer()), uabs(self.radicand.denom()));
        let (r2, s2) = (uabs(rhs.radicand.numer()), uabs(rhs.radicand.denom()));
        let gr = r1.gcd(&r2);
        let gs = s1.gcd(&s2);
        let mut r = (&r1 / &gr) * (&r2 / &gr);
        let mut s = (&s1 / &gs) * (&s2 / &gs);
        let h = r.gcd(&s);
        r /= &h;
        s /= &h;
        let c = &self.coeff * &rhs.coeff * ratio(gr, gs);
        SqrtRational::from_squarefree(c, r, s)
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;

    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;

    fn neg(self) -> SqrtRational {
        SqrtRational { coeff: -self.coeff, radicand: self.radicand }
    }
}

impl Neg for &SqrtRational {
    type Output = SqrtRational;

    fn neg(self) -> SqrtRational {
        -(self.clone())
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.coeff.numer(), self.coeff.denom())?;
        if !self.radicand.is_one() {
            write!(f, "*sqrt({}/{})", self.radicand.numer(), self.radicand.denom())?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || GfError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for SqrtRational {
    type Err = GfError;

    /// Accepts `p/q*sqrt(r/s)`, `p/q`, `p`, and `sqrt(r/s)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (coeff, rad) = match s.find("sqrt(") {
            Some(pos) => {
                let head = s[..pos].trim_end();
                let inner = s[pos + 5..]
                    .strip_suffix(')')
                    .ok_or_else(|| GfError::Parse(format!("unbalanced sqrt in {s:?}")))?;
                let coeff = match head.strip_suffix('*') {
                    Some(c) => parse_rational(c)?,
                    None if head.is_empty() => BigRational::one(),
                    None if head == "-" => -BigRational::one(),
                    None => return Err(GfError::Parse(format!("expected '*' before sqrt in {s:?}"))),
                };
                (coeff, parse_rational(inner)?)
            }
            None => (parse_rational(s)?, BigRational::one()),
        };
        if coeff.numer().sign() == Sign::NoSign {
            return Ok(SqrtRational::zero());
        }
        SqrtRational::new(coeff, rad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sr(c: BigRational, r: BigRational) -> SqrtRational {
        SqrtRational::new(c, r).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let v = sr(q(2, 3), q(18, 1));
        assert_eq!((v.coeff().clone(), v.radicand().clone()), (q(2, 1), q(2, 1)));
        let z = sr(q(0, 1), q(7, 1));
        assert_eq!((z.coeff().clone(), z.radicand().clone()), (q(0, 1), q(1, 1)));
        let p = sr(q(-1, 2), q(9, 1));
        assert_eq!((p.coeff().clone(), p.radicand().clone()), (q(-3, 2), q(1, 1)));
        assert!(SqrtRational::new(q(1, 1), q(-2, 1)).is_err());
    }

    #[test]
    fn inverse_root_goes_to_denominator() {
        // (1/6) sqrt(6) == sqrt(1/6)
        let a = sr(q(1, 6), q(6, 1));
        let b = sr(q(1, 1), q(1, 6));
        assert_eq!(a, b);
        assert_eq!(b.to_string(), "1/1*sqrt(1/6)");
    }

    #[test]
    fn products() {
        let two = sr(q(1, 1), q(2, 1));
        assert_eq!(&two * &two, SqrtRational::from_int(2));
        let a = sr(q(1, 2), q(3, 1));
        let b = sr(q(2, 1), q(3, 1));
        assert_eq!(&a * &b, SqrtRational::from_int(3));
        let c = sr(q(1, 1), q(3, 1));
        assert_eq!(&two * &c, sr(q(1, 1), q(6, 1)));
    }

    #[test]
    fn same_radicand_sums() {
        let a = sr(q(1, 1), q(6, 1));
        assert_eq!(a.add_same_radicand(&a).unwrap(), sr(q(2, 1), q(6, 1)));
        let b = sr(q(1, 1), q(2, 1));
        assert!(b.add_same_radicand(&-b.clone()).unwrap().is_zero());
        assert!(b.add_same_radicand(&sr(q(1, 1), q(3, 1))).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["1/1*sqrt(1/6)", "-3/2", "0/1", "2/5*sqrt(7/3)", "5/1*sqrt(2/1)"] {
            let v: SqrtRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(v.to_string().parse::<SqrtRational>().unwrap(), v);
        }
        assert_eq!("sqrt(8)".parse::<SqrtRational>().unwrap().to_string(), "2/1*sqrt(2/1)");
        assert!("1/0".parse::<SqrtRational>().is_err());
    }

    #[test]
    fn float_conversion() {
        let v: SqrtRational = "1/1*sqrt(1/6)".parse().unwrap();
        assert!((v.to_f64() - (1.0f64 / 6.0).sqrt()).abs() < 1e-16);
        assert_eq!((-v).to_f64(), -(1.0f64 / 6.0).sqrt());
    }
}
