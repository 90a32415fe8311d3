use std::fmt;

use num_rational::BigRational;

use super::sixj::{wigner_6j_oracle, SixJLabel};
use super::threej::{wigner_3j, ThreeJLabel};
use crate::arith::{HalfInt, RadicalSum, SqrtRational};
use crate::error::{GfError, Result};

/// Labels of a 9j symbol as a 3x3 array of doubled angular momenta.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NineJLabel {
    pub two_j: [[i64; 3]; 3],
}

impl NineJLabel {
    pub fn new(two_j: [[i64; 3]; 3]) -> Result<Self> {
        let l = NineJLabel { two_j };
        if two_j.iter().flatten().any(|&x| x < 0) {
            return Err(GfError::Domain("negative angular momentum in 9j label".into()));
        }
        for t in l.row_and_column_triads() {
            if t.iter().sum::<i64>() % 2 != 0 {
                return Err(GfError::Domain("9j triad with half-integer sum".into()));
            }
        }
        Ok(l)
    }

    fn row_and_column_triads(&self) -> Vec<[i64; 3]> {
        let a = self.two_j;
        let mut out: Vec<[i64; 3]> = a.to_vec();
        for c in 0..3 {
            out.push([a[0][c], a[1][c], a[2][c]]);
        }
        out
    }

    pub fn triangles_ok(&self) -> bool {
        self.row_and_column_triads()
            .iter()
            .all(|&[a, b, c]| (a + b + c) % 2 == 0 && c <= a + b && c >= (a - b).abs())
    }

    pub fn transpose(&self) -> NineJLabel {
        let a = self.two_j;
        NineJLabel { two_j: [0, 1, 2].map(|r| [0, 1, 2].map(|c| a[c][r])) }
    }
}

impl fmt::Display for NineJLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .two_j
            .iter()
            .map(|r| r.iter().map(|&x| HalfInt::from_doubled(x).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{{{}}}", rows.join("; "))
    }
}

fn three_j(two_j: [i64; 3], two_m: [i64; 3]) -> SqrtRational {
    match ThreeJLabel::new(two_j, two_m) {
        Ok(l) => wigner_3j(&l),
        Err(_) => SqrtRational::zero(),
    }
}

/// 9j symbol as the sum over all magnetic numbers of six 3j symbols, one per
/// row and one per column.
pub fn wigner_9j(label: &NineJLabel) -> SqrtRational {
    if !label.triangles_ok() {
        return SqrtRational::zero();
    }
    let a = label.two_j;
    let range = |tj: i64| (-tj..=tj).step_by(2);
    let fits = |m: i64, tj: i64| m.abs() <= tj;
    let mut acc = RadicalSum::new();
    // free: m11 m12 m21 m22; the rest follow from the zero-sum rules
    for m11 in range(a[0][0]) {
        for m12 in range(a[0][1]) {
            let m13 = -m11 - m12;
            if !fits(m13, a[0][2]) {
                continue;
            }
            let r1 = three_j(a[0], [m11, m12, m13]);
            if r1.is_zero() {
                continue;
            }
            for m21 in range(a[1][0]) {
                let m31 = -m11 - m21;
                if !fits(m31, a[2][0]) {
                    continue;
                }
                let c1 = three_j([a[0][0], a[1][0], a[2][0]], [m11, m21, m31]);
                if c1.is_zero() {
                    continue;
                }
                let p = &r1 * &c1;
                for m22 in range(a[1][1]) {
                    let m23 = -m21 - m22;
                    let m32 = -m12 - m22;
                    let m33 = -m31 - m32;
                    if !fits(m23, a[1][2]) || !fits(m32, a[2][1]) || !fits(m33, a[2][2]) {
                        continue;
                    }
                    let rest = [
                        three_j(a[1], [m21, m22, m23]),
                        three_j(a[2], [m31, m32, m33]),
                        three_j([a[0][1], a[1][1], a[2][1]], [m12, m22, m32]),
                        three_j([a[0][2], a[1][2], a[2][2]], [m13, m23, m33]),
                    ];
                    if rest.iter().any(SqrtRational::is_zero) {
                        continue;
                    }
                    let mut t = p.clone();
                    for v in &rest {
                        t = &t * v;
                    }
                    acc.add(&t);
                }
            }
        }
    }
    acc.to_sqrt_rational()
        .expect("a recoupling coefficient is a rational multiple of one square root")
}

/// 9j symbol as a single sum over products of three 6j symbols.
pub fn wigner_9j_via_6j(label: &NineJLabel) -> SqrtRational {
    if !label.triangles_ok() {
        return SqrtRational::zero();
    }
    let [[a, b, c], [d, e, f], [g, h, i]] = label.two_j;
    let lo = [(a - i).abs(), (d - h).abs(), (b - f).abs()].into_iter().max().unwrap_or(0);
    let hi = [a + i, d + h, b + f].into_iter().min().unwrap_or(-1);
    let mut acc = RadicalSum::new();
    let mut x = lo;
    while x <= hi {
        let six = |j: [i64; 6]| match SixJLabel::new(j) {
            Ok(l) => wigner_6j_oracle(&l),
            Err(_) => SqrtRational::zero(),
        };
        let p = &(&six([a, d, g, h, i, x]) * &six([b, e, h, d, x, f])) * &six([c, f, i, x, a, b]);
        if !p.is_zero() {
            // (-1)^(2x) (2x + 1)
            let sign = if x % 2 == 0 { 1 } else { -1 };
            acc.add(&p.scale(&BigRational::from_integer((sign * (x + 1)).into())));
        }
        x += 2;
    }
    acc.to_sqrt_rational()
        .expect("a recoupling coefficient is a rational multiple of one square root")
}
