use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, HalfInt, PrimeExps, SqrtRational};
use crate::error::{GfError, Result};

/// Labels of a 3j symbol `(j1 j2 j3; m1 m2 m3)`, all doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeJLabel {
    pub two_j: [i64; 3],
    pub two_m: [i64; 3],
}

impl ThreeJLabel {
    /// Checks `|m| <= j` and `m = j (mod 1)` for each column.
    pub fn new(two_j: [i64; 3], two_m: [i64; 3]) -> Result<Self> {
        for i in 0..3 {
            if two_j[i] < 0 {
                return Err(GfError::Domain(format!("negative j in column {}", i + 1)));
            }
            if two_m[i].abs() > two_j[i] || (two_j[i] - two_m[i]) % 2 != 0 {
                return Err(GfError::Domain(format!(
                    "m = {} is not a projection of j = {}",
                    HalfInt::from_doubled(two_m[i]),
                    HalfInt::from_doubled(two_j[i])
                )));
            }
        }
        Ok(ThreeJLabel { two_j, two_m })
    }

    pub fn j(&self, i: usize) -> HalfInt {
        HalfInt::from_doubled(self.two_j[i])
    }

    pub fn m(&self, i: usize) -> HalfInt {
        HalfInt::from_doubled(self.two_m[i])
    }

    /// True when the symbol can be nonzero: m-sum zero, integral J, triangle.
    pub fn selection_ok(&self) -> bool {
        let [a, b, c] = self.two_j;
        self.two_m.iter().sum::<i64>() == 0
            && (a + b + c) % 2 == 0
            && c <= a + b
            && c >= (a - b).abs()
    }
}

impl fmt::Display for ThreeJLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} {} {}; {} {} {})",
            self.j(0),
            self.j(1),
            self.j(2),
            self.m(0),
            self.m(1),
            self.m(2)
        )
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Racah single-sum evaluation of the 3j symbol. Returns exact zero whenever a
/// selection rule fails.
pub fn wigner_3j(label: &ThreeJLabel) -> SqrtRational {
    if !label.selection_ok() {
        return SqrtRational::zero();
    }
    let [tj1, tj2, tj3] = label.two_j;
    let [tm1, tm2, tm3] = label.two_m;
    // every quantity below is an integer once the selection rules hold
    let h = |x: i64| x / 2;
    let j1pj2mj3 = h(tj1 + tj2 - tj3);
    let j1mj2pj3 = h(tj1 - tj2 + tj3);
    let mj1pj2pj3 = h(-tj1 + tj2 + tj3);
    let jsum = h(tj1 + tj2 + tj3);

    let mut pre = PrimeExps::one();
    for n in [j1pj2mj3, j1mj2pj3, mj1pj2pj3] {
        pre.mul_factorial(n as u64, 1);
    }
    pre.mul_factorial((jsum + 1) as u64, -1);
    for (tj, tm) in [(tj1, tm1), (tj2, tm2), (tj3, tm3)] {
        pre.mul_factorial(h(tj + tm) as u64, 1);
        pre.mul_factorial(h(tj - tm) as u64, 1);
    }

    let a1 = h(tj3 - tj2 + tm1); // j3 - j2 + m1
    let a2 = h(tj3 - tj1 - tm2); // j3 - j1 - m2
    let b1 = j1pj2mj3;
    let b2 = h(tj1 - tm1); // j1 - m1
    let b3 = h(tj2 + tm2); // j2 + m2
    let kmin = 0.max(-a1).max(-a2);
    let kmax = b1.min(b2).min(b3);
    let mut sum = BigRational::zero();
    for k in kmin..=kmax {
        let den: BigUint = [k, a1 + k, a2 + k, b1 - k, b2 - k, b3 - k]
            .iter()
            .map(|&n| factorial(n as u64))
            .product();
        let term = BigRational::new(BigInt::from(sign(k)), BigInt::from(den));
        sum += term;
    }
    if sum.is_zero() {
        return SqrtRational::zero();
    }
    let phase = sign(h(tj1 - tj2 - tm3));
    let (c, r) = pre.sqrt_parts();
    SqrtRational::from_squarefree(sum * c * BigRational::from_integer(phase.into()), r, BigUint::one())
}

/// Clebsch–Gordan coefficient `<j1 m1, j2 m2 | j3 m3>` in the Condon–Shortley
/// convention, via the 3j symbol.
pub fn clebsch_gordan(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j3: HalfInt, m3: HalfInt) -> SqrtRational {
    let label = match ThreeJLabel::new(
        [j1.doubled(), j2.doubled(), j3.doubled()],
        [m1.doubled(), m2.doubled(), -m3.doubled()],
    ) {
        Ok(l) => l,
        Err(_) => return SqrtRational::zero(),
    };
    let tj = wigner_3j(&label);
    if tj.is_zero() {
        return tj;
    }
    let phase = sign((j1.doubled() - j2.doubled() + m3.doubled()) / 2);
    let dim = SqrtRational::sqrt_of(BigRational::from_integer((j3.doubled() + 1).into()))
        .expect("positive dimension");
    let v = &tj * &dim;
    if phase < 0 {
        -v
    } else {
        v
    }
}

/// Every valid 3j label with all doubled j at most `max_two_j`, in
/// lexicographic order. Labels violating the selection rules are skipped.
pub fn labels_up_to(max_two_j: i64) -> Vec<ThreeJLabel> {
    let mut out = Vec::new();
    for a in 0..=max_two_j {
        for b in 0..=max_two_j {
            for c in 0..=max_two_j {
                if (a + b + c) % 2 != 0 || c > a + b || c < (a - b).abs() {
                    continue;
                }
                for ma in (-a..=a).step_by(2) {
                    for mb in (-b..=b).step_by(2) {
                        let mc = -ma - mb;
                        if mc.abs() <= c {
                            out.push(ThreeJLabel { two_j: [a, b, c], two_m: [ma, mb, mc] });
                        }
                    }
                }
            }
        }
    }
    out
}
