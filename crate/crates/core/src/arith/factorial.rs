//! Shared factorial table and prime-exponent bookkeeping for factorial ratios.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::primes::primes_up_to;

/// Default number of factorials held when `GFKIT_FACT_MAX` is unset.
pub const DEFAULT_FACT_MAX: usize = 512;

/// Table of `k!` for `k = 0..len`, extended on demand.
#[derive(Debug)]
pub struct FactorialCache {
    table: RwLock<Vec<BigUint>>,
}

impl FactorialCache {
    pub fn new(n_max: usize) -> Self {
        let cache = FactorialCache { table: RwLock::new(vec![BigUint::one()]) };
        cache.grow_to(n_max);
        cache
    }

    pub fn len(&self) -> usize {
        self.table.read().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn grow_to(&self, n: usize) {
        let mut t = self.table.write();
        while t.len() <= n {
            let k = t.len();
            let next = &t[k - 1] * BigUint::from(k);
            t.push(next);
        }
    }

    /// `n!`, growing the table if `n` is past its end.
    pub fn get(&self, n: usize) -> BigUint {
        {
            let t = self.table.read();
            if let Some(v) = t.get(n) {
                return v.clone();
            }
        }
        self.grow_to(n);
        self.table.read()[n].clone()
    }
}

fn initial_bound() -> usize {
    std::env::var("GFKIT_FACT_MAX")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_FACT_MAX)
}

static FACTORIALS: Lazy<FactorialCache> = Lazy::new(|| FactorialCache::new(initial_bound()));

/// The process-wide factorial cache.
pub fn factorials() -> &'static FactorialCache {
    &FACTORIALS
}

pub fn factorial(n: u64) -> BigUint {
    FACTORIALS.get(n as usize)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::from(0u32);
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

/// A positive rational stored as exponents over the primes, so that products
/// and quotients of factorials never materialise large integers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeExps {
    exps: Vec<i64>,
}

fn legendre(n: u64, p: u64) -> i64 {
    let mut e = 0i64;
    let mut q = p;
    while q <= n {
        e += (n / q) as i64;
        match q.checked_mul(p) {
            Some(v) => q = v,
            None => break,
        }
    }
    e
}

impl PrimeExps {
    pub fn one() -> Self {
        PrimeExps::default()
    }

    fn bump(&mut self, idx: usize, by: i64) {
        if self.exps.len() <= idx {
            self.exps.resize(idx + 1, 0);
        }
        self.exps[idx] += by;
    }

    /// Multiplies by `(n!)^power`.
    pub fn mul_factorial(&mut self, n: u64, power: i64) {
        if n < 2 {
            return;
        }
        for (i, p) in primes_up_to(n).into_iter().enumerate() {
            self.bump(i, power * legendre(n, p));
        }
    }

    /// Multiplies by `other^power`.
    pub fn mul_exps(&mut self, other: &PrimeExps, power: i64) {
        for (i, &e) in other.exps.iter().enumerate() {
            if e != 0 {
                self.bump(i, power * e);
            }
        }
    }

    /// Multiplies by `n^power`; `n` must be positive.
    pub fn mul_int(&mut self, n: u64, power: i64) {
        assert!(n > 0, "prime exponents only represent positive values");
        let mut m = n;
        for (i, p) in primes_up_to(n).into_iter().enumerate() {
            if p * p > m {
                if m > 1 {
                    let idx = primes_up_to(m).len() - 1;
                    self.bump(idx, power);
                }
                return;
            }
            while m % p == 0 {
                m /= p;
                self.bump(i, power);
            }
            if m == 1 {
                return;
            }
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let primes = primes_up_to(self.max_prime());
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (i, &e) in self.exps.iter().enumerate() {
            let p = BigUint::from(primes[i]);
            if e > 0 {
                num *= p.pow(e as u32);
            } else if e < 0 {
                den *= p.pow((-e) as u32);
            }
        }
        BigRational::new(num.into(), den.into())
    }

    fn max_prime(&self) -> u64 {
        // enough to index every stored exponent
        let want = self.exps.len();
        let mut bound = 16u64;
        loop {
            let ps = primes_up_to(bound);
            if ps.len() >= want {
                return bound;
            }
            bound *= 2;
        }
    }

    /// Square root of the value as `coeff * sqrt(r)` with `r` squarefree.
    pub fn sqrt_parts(&self) -> (BigRational, BigUint) {
        let primes = primes_up_to(self.max_prime());
        let mut cn = BigUint::one();
        let mut cd = BigUint::one();
        let mut r = BigUint::one();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = BigUint::from(primes[i]);
            let half = e.div_euclid(2);
            if half > 0 {
                cn *= p.pow(half as u32);
            } else if half < 0 {
                cd *= p.pow((-half) as u32);
            }
            if e.rem_euclid(2) == 1 {
                // e = 2*half + 1; p^e = p^(2*half) * p
                r *= p;
            }
        }
        (BigRational::new(cn.into(), cd.into()), r)
    }
}
