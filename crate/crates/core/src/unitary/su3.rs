use std::fmt;

use nalgebra::Matrix3;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, sr_mul, HalfInt, SqrtRational};
use crate::error::{GfError, Result};
use crate::poly::Poly;
use crate::wigner::{clebsch_gordan, wigner_3j, ThreeJLabel};

/// SU(3) state label `(lambda mu; p q t0)` with derived isospin `t` and
/// hypercharge `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Su3Label {
    pub lambda: i64,
    pub mu: i64,
    pub p: i64,
    pub q: i64,
    pub t: HalfInt,
    pub t0: HalfInt,
    pub y: i64,
}

impl Su3Label {
    pub fn new(lambda: i64, mu: i64, p: i64, q: i64, two_t0: i64) -> Result<Self> {
        if lambda < 0 || mu < 0 {
            return Err(GfError::Domain(format!("irrep ({lambda},{mu}) has a negative label")));
        }
        if !(0..=lambda).contains(&p) || !(0..=mu).contains(&q) {
            return Err(GfError::Domain(format!("p = {p}, q = {q} outside the ranges for ({lambda},{mu})")));
        }
        let t = HalfInt::from_doubled(mu + p - q);
        if two_t0.abs() > t.doubled() || (t.doubled() - two_t0) % 2 != 0 {
            return Err(GfError::Domain(format!("t0 = {two_t0}/2 incompatible with t = {t}")));
        }
        let y = -(2 * lambda + mu) + 3 * (p + q);
        Ok(Su3Label { lambda, mu, p, q, t, t0: HalfInt::from_doubled(two_t0), y })
    }

    /// Highest-weight state of `(lambda, mu)`.
    pub fn highest(lambda: i64, mu: i64) -> Result<Self> {
        Su3Label::new(lambda, mu, lambda, mu, lambda)
    }
}

impl fmt::Display for Su3Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; p={} q={} t={} t0={} y={})", self.lambda, self.mu, self.p, self.q, self.t, self.t0, self.y)
    }
}

/// All states of `(lambda, mu)`, ordered by `p`, `q`, then `t0` descending.
pub fn su3_states(lambda: i64, mu: i64) -> Result<Vec<Su3Label>> {
    let mut out = Vec::new();
    for p in (0..=lambda).rev() {
        for q in (0..=mu).rev() {
            let two_t = mu + p - q;
            let mut two_t0 = two_t;
            while two_t0 >= -two_t {
                out.push(Su3Label::new(lambda, mu, p, q, two_t0)?);
                two_t0 -= 2;
            }
        }
    }
    Ok(out)
}

pub fn su3_dimension(lambda: i64, mu: i64) -> i64 {
    (lambda + 1) * (mu + 1) * (lambda + mu + 2) / 2
}

/// `(l1, 0) x (l2, 0) = sum over mu3 of (l1 + l2 - 2 mu3, mu3)`.
pub fn su3_decompose_multfree(l1: i64, l2: i64) -> Result<Vec<(i64, i64)>> {
    if l1 < 0 || l2 < 0 {
        return Err(GfError::Domain(format!("negative labels ({l1}, {l2})")));
    }
    Ok((0..=l1.min(l2)).map(|m3| (l1 + l2 - 2 * m3, m3)).collect())
}

fn fact(n: i64) -> BigInt {
    BigInt::from(factorial(n as u64))
}

/// Basis polynomial in `(z1,z2,z3,Z1,Z2,Z3)`: the coefficient of
/// `x1^p x2^(lambda-p) y1^(mu-q) y2^q xi^(t+t0) eta^(t-t0)` in
/// `exp(x1 xi z1 + x1 eta z2 + x2 z3 + y1 eta Z1 - y1 xi Z2 + y2 Z3)`.
fn basis_poly(a: &Su3Label) -> Poly<BigRational> {
    let up = (a.t + a.t0).doubled() / 2;
    let down = (a.t - a.t0).doubled() / 2;
    let mut out = Poly::zero(6);
    for k1 in 0..=a.p.min(up) {
        let k2 = a.p - k1;
        let k5 = up - k1;
        let k4 = a.mu - a.q - k5;
        if k2 < 0 || k4 < 0 || k5 < 0 || k2 + k4 != down {
            continue;
        }
        let e = [k1, k2, a.lambda - a.p, k4, k5, a.q];
        let den: BigInt = e.iter().map(|&k| fact(k)).product();
        let sign = if k5 % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(e.iter().map(|&k| k as u32).collect(), BigRational::new(sign, den));
    }
    out
}

fn fock_norm_sq(p: &Poly<BigRational>) -> BigRational {
    p.terms()
        .map(|(e, c)| {
            let w: BigInt = e.iter().map(|&k| fact(k as i64)).product();
            c * c * BigRational::from_integer(w)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Coupled `(lambda3 mu3)` state in `(u, w)`: the `s^(l1 - mu3)` part of the
/// basis polynomial at `z = s u + w`, `Z = u x w` (unnormalized, with the
/// `(-1)^q` phase).
fn coupled_state(l1: i64, a3: &Su3Label) -> Poly<BigRational> {
    let v = |i: usize| Poly::<BigRational>::var(7, i);
    let (u, w, s) = ([v(0), v(1), v(2)], [v(3), v(4), v(5)], v(6));
    let cross = |i: usize, j: usize| u[i].mul(&w[j]).sub(&u[j].mul(&w[i]));
    let subs = [
        s.mul(&u[0]).add(&w[0]),
        s.mul(&u[1]).add(&w[1]),
        s.mul(&u[2]).add(&w[2]),
        cross(1, 2),
        cross(2, 0),
        cross(0, 1),
    ];
    let full = basis_poly(a3).compose(&subs);
    let want = (l1 - a3.mu) as u32;
    let mut out = Poly::zero(6);
    let phase = if a3.q % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    for (e, c) in full.terms() {
        if e[6] == want {
            out.add_term(e[..6].to_vec(), c * &phase);
        }
    }
    out
}

// Exponents of z1, z2, z3 for a (lambda, 0) state.
fn symmetric_exps(a: &Su3Label) -> [i64; 3] {
    let up = (a.t + a.t0).doubled() / 2;
    [up, a.p - up, a.lambda - a.p]
}

fn check_symmetric(a: &Su3Label, lambda: i64) -> Result<()> {
    if a.mu != 0 || a.lambda != lambda {
        return Err(GfError::Domain(format!("state {a} is not in ({lambda}, 0)")));
    }
    Ok(())
}

/// Unnormalized-sign Clebsch-Gordan coefficient `<V1(u) V2(w), Psi3>`.
fn raw_cg(a1: &Su3Label, a2: &Su3Label, a3: &Su3Label) -> SqrtRational {
    let psi = coupled_state(a1.lambda, a3);
    let norm = fock_norm_sq(&psi);
    if norm.is_zero() {
        return SqrtRational::zero();
    }
    let e1 = symmetric_exps(a1);
    let e2 = symmetric_exps(a2);
    let key: Vec<u32> = e1.iter().chain(e2.iter()).map(|&k| k as u32).collect();
    let c = psi.coeff(&key);
    if c.is_zero() {
        return SqrtRational::zero();
    }
    let w: BigInt = e1.iter().chain(e2.iter()).map(|&k| fact(k)).product();
    // c * sqrt(w / norm)
    let r = SqrtRational::sqrt_of(BigRational::from_integer(w) / norm).expect("positive radicand");
    r.scale(&c)
}

fn selection_ok(a1: &Su3Label, a2: &Su3Label, a3: &Su3Label) -> bool {
    a1.y + a2.y == a3.y
        && a1.t0 + a2.t0 == a3.t0
        && a3.t.doubled() <= a1.t.doubled() + a2.t.doubled()
        && a3.t.doubled() >= (a1.t.doubled() - a2.t.doubled()).abs()
}

// +1 or -1 so that the first nonzero coefficient into the highest weight of
// (lambda3, mu3), scanning a1 from the top, is positive.
fn coupling_sign(l1: i64, l2: i64, lambda3: i64, mu3: i64) -> Result<i32> {
    let top = Su3Label::highest(lambda3, mu3)?;
    for a1 in su3_states(l1, 0)? {
        for a2 in su3_states(l2, 0)? {
            if !selection_ok(&a1, &a2, &top) {
                continue;
            }
            let c = raw_cg(&a1, &a2, &top);
            if !c.is_zero() {
                return Ok(c.signum());
            }
        }
    }
    Err(GfError::Domain(format!("({lambda3},{mu3}) does not occur in ({l1},0) x ({l2},0)")))
}

/// Wigner coefficient and isoscalar factor for `(l1,0) x (l2,0) -> (lambda3,mu3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Su3Wigner {
    /// Full SU(3) Clebsch-Gordan coefficient `<a1 a2 | a3>`.
    pub cg: SqrtRational,
    /// Isoscalar factor times the SU(2) 3j symbol `(t1 t2 t3; t01 t02 -t03)`.
    pub wigner: SqrtRational,
    pub isoscalar: SqrtRational,
}

/// Multiplicity-free SU(3) coupling coefficients.
///
/// The states of `(lambda, mu)` are the Fock-normalized polynomials of the
/// basis generating function; the coupled state is obtained by substituting
/// `z = s u + w`, `Z = u x w`, which projects onto the `(lambda3, mu3)`
/// component. `isoscalar = cg / <t1 t01 t2 t02 | t3 t03>` is computed at a
/// magnetic triple where the SU(2) coefficient does not vanish.
pub fn su3_wigner_multfree(
    l1: i64,
    l2: i64,
    lambda3: i64,
    mu3: i64,
    a1: &Su3Label,
    a2: &Su3Label,
    a3: &Su3Label,
) -> Result<Su3Wigner> {
    check_symmetric(a1, l1)?;
    check_symmetric(a2, l2)?;
    if !su3_decompose_multfree(l1, l2)?.contains(&(lambda3, mu3)) {
        return Err(GfError::Domain(format!("({lambda3},{mu3}) does not occur in ({l1},0) x ({l2},0)")));
    }
    if a3.lambda != lambda3 || a3.mu != mu3 {
        return Err(GfError::Domain(format!("state {a3} is not in ({lambda3}, {mu3})")));
    }
    let zero = Su3Wigner { cg: SqrtRational::zero(), wigner: SqrtRational::zero(), isoscalar: SqrtRational::zero() };
    if !selection_ok(a1, a2, a3) {
        return Ok(zero);
    }
    let sign = BigRational::from_integer(coupling_sign(l1, l2, lambda3, mu3)?.into());
    let cg = raw_cg(a1, a2, a3).scale(&sign);

    // reference magnetic triple with t03 = t3
    let (t1, t2, t3) = (a1.t, a2.t, a3.t);
    let mut isoscalar = SqrtRational::zero();
    let mut two_m1 = t1.doubled();
    while two_m1 >= -t1.doubled() {
        let m1 = HalfInt::from_doubled(two_m1);
        let m2 = t3 - m1;
        if m2.abs().doubled() <= t2.doubled() {
            let su2 = clebsch_gordan(t1, m1, t2, m2, t3, t3);
            if !su2.is_zero() {
                let b1 = Su3Label::new(l1, 0, a1.p, 0, two_m1)?;
                let b2 = Su3Label::new(l2, 0, a2.p, 0, m2.doubled())?;
                let b3 = Su3Label::new(lambda3, mu3, a3.p, a3.q, t3.doubled())?;
                let c = raw_cg(&b1, &b2, &b3).scale(&sign);
                isoscalar = sr_mul(&c, &su2.recip().expect("nonzero"));
                break;
            }
        }
        two_m1 -= 2;
    }
    let tj = ThreeJLabel::new(
        [t1.doubled(), t2.doubled(), t3.doubled()],
        [a1.t0.doubled(), a2.t0.doubled(), -a3.t0.doubled()],
    )?;
    let wigner = sr_mul(&isoscalar, &wigner_3j(&tj));
    Ok(Su3Wigner { cg, wigner, isoscalar })
}

fn su2_block(a: [Complex64; 2], name: &str) -> Result<[[Complex64; 2]; 2]> {
    let n = a[0].norm_sqr() + a[1].norm_sqr();
    if (n - 1.0).abs() > 1e-12 {
        return Err(GfError::Domain(format!("{name}: |a1|^2 + |a2|^2 = {n}, expected 1")));
    }
    Ok([[a[0], a[1]], [-a[1].conj(), a[0].conj()]])
}

/// `U = A R(nu3/2) D(beta3) B` with `A`, `B` in the upper SU(2) block, `R` a
/// rotation in the lower block and `D = diag(d, d, conj(d)^2)`,
/// `d = exp(i beta3)`.
pub fn su3_euler_matrix(a: [Complex64; 2], nu3: f64, beta3: f64, b: [Complex64; 2]) -> Result<Matrix3<Complex64>> {
    if !(0.0..=std::f64::consts::PI).contains(&nu3) || !(0.0..=std::f64::consts::PI).contains(&beta3) {
        return Err(GfError::Domain(format!("nu3 = {nu3}, beta3 = {beta3} outside [0, pi]")));
    }
    let embed = |m: [[Complex64; 2]; 2]| {
        let mut out = Matrix3::identity();
        out[(0, 0)] = m[0][0];
        out[(0, 1)] = m[0][1];
        out[(1, 0)] = m[1][0];
        out[(1, 1)] = m[1][1];
        out
    };
    let am = embed(su2_block(a, "a")?);
    let bm = embed(su2_block(b, "b")?);
    let (s, c) = (nu3 / 2.0).sin_cos();
    let mut r = Matrix3::<Complex64>::identity();
    r[(1, 1)] = c.into();
    r[(1, 2)] = s.into();
    r[(2, 1)] = (-s).into();
    r[(2, 2)] = c.into();
    let d = Complex64::from_polar(1.0, beta3);
    let dm = Matrix3::from_diagonal(&nalgebra::Vector3::new(d, d, d.conj() * d.conj()));
    Ok(am * r * dm * bm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_dimensions() {
        assert_eq!(su3_decompose_multfree(1, 1).unwrap(), vec![(2, 0), (0, 1)]);
        assert_eq!(su3_decompose_multfree(3, 0).unwrap(), vec![(3, 0)]);
        for l1 in 0..5 {
            for l2 in 0..5 {
                let total: i64 = su3_decompose_multfree(l1, l2).unwrap().iter().map(|&(a, b)| su3_dimension(a, b)).sum();
                assert_eq!(total, su3_dimension(l1, 0) * su3_dimension(l2, 0));
            }
        }
        assert_eq!(su3_states(1, 1).unwrap().len(), 8);
    }

    #[test]
    fn trivial_partner() {
        for a in su3_states(2, 0).unwrap() {
            let zero = Su3Label::new(0, 0, 0, 0, 0).unwrap();
            let w = su3_wigner_multfree(2, 0, 2, 0, &a, &zero, &a).unwrap();
            assert_eq!(w.isoscalar, SqrtRational::one());
            assert_eq!(w.cg, SqrtRational::one());
        }
    }

    #[test]
    fn euler_identity() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let u = su3_euler_matrix([one, zero], 0.0, 0.0, [one, zero]).unwrap();
        assert!((u - Matrix3::identity()).norm() < 1e-15);
    }
}
