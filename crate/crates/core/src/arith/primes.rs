//! Prime sieve, Miller–Rabin, Pollard–Brent rho and squarefree splitting.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

/// Default bound for trial division before falling back to rho.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

static SIEVE: Lazy<RwLock<(u64, Vec<u64>)>> = Lazy::new(|| RwLock::new((1000, sieve(1000))));

fn sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize + 1;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u64);
            let mut k = i * i;
            while k < n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

/// All primes `<= limit`. Grows the shared sieve when needed.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    {
        let s = SIEVE.read();
        if s.0 >= limit {
            return s.1.iter().copied().take_while(|&p| p <= limit).collect();
        }
    }
    let fresh = sieve(limit);
    let mut s = SIEVE.write();
    if limit > s.0 {
        *s = (limit, fresh);
    }
    s.1.iter().copied().take_while(|&p| p <= limit).collect()
}

fn pow_mod(base: &BigUint, exp: &BigUint, m: &BigUint) -> BigUint {
    base.modpow(exp, m)
}

/// Miller–Rabin with the first twelve prime bases. Deterministic below
/// 3.3e24, probabilistic (error < 4^-12) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in BASES.iter() {
        let bp = BigUint::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in BASES.iter() {
        let mut x = pow_mod(&BigUint::from(a), &d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard–Brent rho. Returns a nontrivial factor of the odd composite `n`.
fn rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Prime factorisation with trial division up to `bound`, then perfect-square
/// detection, Miller–Rabin and rho on the cofactor.
pub fn factorize(n: &BigUint, bound: u64) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    let mut m = n.clone();
    let small = primes_up_to(bound);
    for &p in small.iter() {
        if m.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.insert(bp, e);
        }
    }
    if !m.is_one() {
        split_large(m, bound, 1, &mut out);
    }
    out
}

fn split_large(m: BigUint, bound: u64, mult: u32, out: &mut BTreeMap<BigUint, u32>) {
    if m.is_one() {
        return;
    }
    let b = BigUint::from(bound);
    if m <= &b * &b || is_probable_prime(&m) {
        *out.entry(m).or_insert(0) += mult;
        return;
    }
    let r = m.sqrt();
    if &r * &r == m {
        split_large(r, bound, mult * 2, out);
        return;
    }
    let d = rho(&m);
    let e = &m / &d;
    split_large(d, bound, mult, out);
    split_large(e, bound, mult, out);
}

/// Writes `n = root^2 * core` with `core` squarefree.
pub fn squarefree_split(n: &BigUint, bound: u64) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(v) = n.to_u64() {
        if v < 4 {
            return (BigUint::one(), n.clone());
        }
    }
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    for (p, e) in factorize(n, bound) {
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    (root, core)
}
