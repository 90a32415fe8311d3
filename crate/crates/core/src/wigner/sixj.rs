use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::threej::{wigner_3j, ThreeJLabel};
use crate::arith::{HalfInt, PrimeExps, RadicalSum, SqrtRational};
use crate::error::{GfError, Result};
use crate::series::{pack, BoxSeries};

/// Labels `{j1 j2 j3; l1 l2 l3}`, doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SixJLabel {
    pub two_j: [i64; 6],
}

impl SixJLabel {
    /// Rejects negative entries and triads with odd doubled sum.
    pub fn new(two_j: [i64; 6]) -> Result<Self> {
        if two_j.iter().any(|&x| x < 0) {
            return Err(GfError::Domain("negative angular momentum in 6j label".into()));
        }
        let l = SixJLabel { two_j };
        for t in l.triads() {
            if t.iter().sum::<i64>() % 2 != 0 {
                return Err(GfError::Domain(format!(
                    "triad ({} {} {}) has half-integer sum",
                    HalfInt::from_doubled(t[0]),
                    HalfInt::from_doubled(t[1]),
                    HalfInt::from_doubled(t[2])
                )));
            }
        }
        Ok(l)
    }

    /// The four coupled triads `(j1 j2 j3) (j1 l2 l3) (l1 j2 l3) (l1 l2 j3)`.
    pub fn triads(&self) -> [[i64; 3]; 4] {
        let [j1, j2, j3, l1, l2, l3] = self.two_j;
        [[j1, j2, j3], [j1, l2, l3], [l1, j2, l3], [l1, l2, j3]]
    }

    pub fn triangles_ok(&self) -> bool {
        self.triads().iter().all(|&[a, b, c]| (a + b + c) % 2 == 0 && c <= a + b && c >= (a - b).abs())
    }
}

impl fmt::Display for SixJLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = |i: usize| HalfInt::from_doubled(self.two_j[i]);
        write!(f, "{{{} {} {}; {} {} {}}}", h(0), h(1), h(2), h(3), h(4), h(5))
    }
}

fn parity(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn three_j(two_j: [i64; 3], two_m: [i64; 3]) -> SqrtRational {
    match ThreeJLabel::new(two_j, two_m) {
        Ok(l) => wigner_3j(&l),
        Err(_) => SqrtRational::zero(),
    }
}

/// Phased product of the three 3j symbols carrying `l1 l2 l3`, summed over
/// `mu1 mu2 mu3`, at fixed `(m1 m2 m3)`. Equals `3j(j1 j2 j3; m) * {6j}`.
fn mu_sum(label: &SixJLabel, two_m: [i64; 3]) -> RadicalSum {
    let [j1, j2, j3, l1, l2, l3] = label.two_j;
    let [m1, m2, m3] = two_m;
    let mut acc = RadicalSum::new();
    for u1 in (-l1..=l1).step_by(2) {
        let u2 = u1 + m3;
        if u2.abs() > l2 {
            continue;
        }
        let u3 = u2 + m1;
        if u3.abs() > l3 || u3 - u1 != -m2 {
            continue;
        }
        let a = three_j([l1, l2, j3], [u1, -u2, m3]);
        if a.is_zero() {
            continue;
        }
        let b = three_j([l2, l3, j1], [u2, -u3, m1]);
        if b.is_zero() {
            continue;
        }
        let c = three_j([l3, l1, j2], [u3, -u1, m2]);
        if c.is_zero() {
            continue;
        }
        let phase = parity((l1 + l2 + l3 + u1 + u2 + u3) / 2);
        let mut term = &(&a * &b) * &c;
        if phase < 0 {
            term = -term;
        }
        acc.add(&term);
    }
    acc
}

fn single_radical(sum: &RadicalSum) -> SqrtRational {
    sum.to_sqrt_rational()
        .expect("a recoupling coefficient is a rational multiple of one square root")
}

/// 6j symbol by brute-force contraction of four 3j symbols over all six
/// magnetic quantum numbers.
pub fn wigner_6j_oracle(label: &SixJLabel) -> SqrtRational {
    if !label.triangles_ok() {
        return SqrtRational::zero();
    }
    let [j1, j2, j3, ..] = label.two_j;
    let mut total = RadicalSum::new();
    for m1 in (-j1..=j1).step_by(2) {
        for m2 in (-j2..=j2).step_by(2) {
            let m3 = -m1 - m2;
            if m3.abs() > j3 {
                continue;
            }
            let outer = three_j([j1, j2, j3], [m1, m2, m3]);
            if outer.is_zero() {
                continue;
            }
            for (k, c) in mu_sum(label, [m1, m2, m3]).terms() {
                total.add(&(&outer * &SqrtRational::from_squarefree(c.clone(), k.clone(), One::one())));
            }
        }
    }
    single_radical(&total)
}

/// Same value with a single fixed magnetic configuration `(m1 m2 m3)`,
/// dividing out the outer 3j. `None` when that 3j vanishes.
pub fn wigner_6j_fixed_m(label: &SixJLabel, two_m: [i64; 3]) -> Option<SqrtRational> {
    if !label.triangles_ok() {
        return Some(SqrtRational::zero());
    }
    let [j1, j2, j3, ..] = label.two_j;
    let outer = three_j([j1, j2, j3], two_m);
    let inv = outer.recip()?;
    Some(&single_radical(&mu_sum(label, two_m)) * &inv)
}

/// Which monomial stands for the third column term `b3` of `g(tau)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnThree {
    /// Product of the third tableau column, completing the pattern of `b1, b2`.
    Symmetric,
    /// The literal monomial `tau03 tau30 tau13 tau31`.
    Literal,
}

// Tableau positions (row r, column c) -> variable 3r + c:
//   row 0: tau10 tau20 tau30
//   row 1: tau01 tau31 tau21
//   row 2: tau32 tau02 tau12
//   row 3: tau23 tau13 tau03
// Row products are a0..a3, column products b1..b3.
fn var(r: usize, c: usize) -> usize {
    3 * r + c
}

fn monomial(vars: &[usize]) -> [u32; 12] {
    let mut e = [0u32; 12];
    for &v in vars {
        e[v] += 1;
    }
    e
}

fn generators(b3: ColumnThree) -> Vec<[u32; 12]> {
    let mut out = Vec::new();
    for r in 0..4 {
        out.push(monomial(&[var(r, 0), var(r, 1), var(r, 2)]));
    }
    for c in 0..2 {
        out.push(monomial(&[var(0, c), var(1, c), var(2, c), var(3, c)]));
    }
    out.push(match b3 {
        ColumnThree::Symmetric => monomial(&[var(0, 2), var(1, 2), var(2, 2), var(3, 2)]),
        ColumnThree::Literal => monomial(&[var(3, 2), var(0, 2), var(3, 1), var(1, 1)]),
    });
    out
}

/// Exponents `k[r][c] = B_c - A_r` of the extracted monomial, where `A_r` are
/// triad sums and `B_c` the column sums `j_a + j_b + l_a + l_b`. `None` if a
/// triangle fails.
fn target_exponents(label: &SixJLabel) -> Option<[u32; 12]> {
    if !label.triangles_ok() {
        return None;
    }
    let [j1, j2, j3, l1, l2, l3] = label.two_j;
    let a = label.triads().map(|t| t.iter().sum::<i64>() / 2);
    let b = [(j1 + j2 + l1 + l2) / 2, (j2 + j3 + l2 + l3) / 2, (j3 + j1 + l3 + l1) / 2];
    let mut k = [0u32; 12];
    for r in 0..4 {
        for c in 0..3 {
            let e = b[c] - a[r];
            if e < 0 {
                return None;
            }
            k[var(r, c)] = e as u32;
        }
    }
    Some(k)
}

/// Coefficient of the target monomial in `g(tau)^-2`.
fn gf_coefficient(k: &[u32; 12], b3: ColumnThree) -> Result<BigInt> {
    let mut g = BoxSeries::constant(k, BigInt::one())?;
    for e in generators(b3) {
        g.add_term(pack(&e)?, BigInt::one());
    }
    let h = g.inverse_unit(3)?;
    let target = pack(k)?;
    let mut c = BigInt::zero();
    // every stored key divides the target, so the packed difference is exact
    for (key, v) in h.terms() {
        let w = h.coeff(target - key);
        if !w.is_zero() {
            c += v * w;
        }
    }
    Ok(c)
}

/// 6j symbol as the product of the four triangle deltas and a coefficient of
/// the generating function `g(tau)^-2`.
pub fn wigner_6j_gf(label: &SixJLabel) -> Result<SqrtRational> {
    wigner_6j_gf_with(label, ColumnThree::Symmetric)
}

pub fn wigner_6j_gf_with(label: &SixJLabel, b3: ColumnThree) -> Result<SqrtRational> {
    let Some(k) = target_exponents(label) else {
        return Ok(SqrtRational::zero());
    };
    let c = gf_coefficient(&k, b3)?;
    if c.is_zero() {
        return Ok(SqrtRational::zero());
    }
    let mut deltas = PrimeExps::one();
    for t in label.triads() {
        let d = crate::arith::triangle_delta_squared(
            HalfInt::from_doubled(t[0]),
            HalfInt::from_doubled(t[1]),
            HalfInt::from_doubled(t[2]),
        )?;
        deltas.mul_exps(&d, 1);
    }
    let (q, r) = deltas.sqrt_parts();
    Ok(SqrtRational::from_squarefree(q * BigRational::from_integer(c), r, One::one()))
}

/// The six column permutations and the upper/lower swaps in two columns,
/// generating the 24-element tetrahedral symmetry group of the 6j symbol.
pub fn sixj_symmetries(label: &SixJLabel) -> Vec<SixJLabel> {
    let [a, b, c, d, e, f] = label.two_j;
    let mut out = Vec::with_capacity(24);
    let cols = [[a, d], [b, e], [c, f]];
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    for p in perms {
        let cs = [cols[p[0]], cols[p[1]], cols[p[2]]];
        // flip none, or exactly two columns
        for flip in [[false, false, false], [true, true, false], [true, false, true], [false, true, true]] {
            let col = |i: usize| if flip[i] { [cs[i][1], cs[i][0]] } else { cs[i] };
            let (x, y, z) = (col(0), col(1), col(2));
            out.push(SixJLabel { two_j: [x[0], y[0], z[0], x[1], y[1], z[1]] });
        }
    }
    out
}
