use std::f64::consts::PI;

use super::gamma::gamma;

/// Bessel function of the first kind J_nu(x) for nu >= 0 and x >= 0.
///
/// Small and moderate arguments use Miller's backward recurrence normalized by
/// the Neumann sum `(x/2)^nu0 = sum_k (nu0 + 2k) Gamma(nu0 + k) / k! J_{nu0+2k}`
/// (or `1 = J_0 + 2 sum J_{2k}` when nu0 = 0); large arguments use the Hankel
/// asymptotic expansion.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    assert!(nu >= 0.0 && x >= 0.0, "bessel_j needs nu >= 0 and x >= 0");
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if x > 25.0 + nu * nu / 2.0 {
        return hankel_asymptotic(nu, x);
    }
    miller(nu, x)
}

fn miller(nu: f64, x: f64) -> f64 {
    let nu0 = nu - nu.floor();
    let target = nu.floor() as usize;
    let start = (target.max(x.ceil() as usize) + 30 + (x.sqrt() * 6.0) as usize) | 1;
    let start = start + 1;
    // weights of the Neumann normalization sum, indexed by order offset
    let mut weights = vec![0.0; start + 1];
    let mut c = if nu0 == 0.0 { 0.0 } else { gamma(nu0) };
    for h in 0..=start / 2 {
        if h > 0 && nu0 != 0.0 {
            c *= (nu0 + h as f64 - 1.0) / h as f64;
        }
        weights[2 * h] = match (nu0 == 0.0, h) {
            (true, 0) => 1.0,
            (true, _) => 2.0,
            (false, _) => (nu0 + 2.0 * h as f64) * c,
        };
    }
    let weight = |k: usize| weights[k];
    let mut next = 0.0;
    let mut cur = 1e-300;
    let mut wanted = 0.0;
    let mut sum = weight(start) * cur;
    for k in (1..=start).rev() {
        let prev = 2.0 * (nu0 + k as f64) / x * cur - next;
        next = cur;
        cur = prev;
        if k - 1 == target {
            wanted = cur;
        }
        sum += weight(k - 1) * cur;
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            sum *= 1e-250;
            wanted *= 1e-250;
        }
    }
    let norm = if nu0 == 0.0 { 1.0 } else { (x / 2.0).powf(nu0) };
    wanted * norm / sum
}

fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let (mut p, mut q) = (0.0, 0.0);
    let mut term = 1.0;
    let mut k = 0usize;
    loop {
        // term = a_k(nu) / x^k with a_k = prod (mu - (2j-1)^2) / (k! 8^k)
        if k % 2 == 0 {
            let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            p += s * term;
        } else {
            let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            q += s * term;
        }
        k += 1;
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() < 1e-17 * (p.abs() + q.abs()) || next.abs() > term.abs() || k > 200 {
            break;
        }
        term = next;
    }
    let chi = x - (nu / 2.0 + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}
