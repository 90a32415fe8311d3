use std::f64::consts::PI;

use num_rational::BigRational;

use super::threej::{wigner_3j, ThreeJLabel};
use crate::arith::SqrtRational;

/// `sqrt((2l1+1)(2l2+1)(2l3+1)) (l1 l2 l3; 0 0 0)(l1 l2 l3; m1 m2 m3)`, the
/// exact part of the Gaunt integral; the full integral divides by `sqrt(4 pi)`.
pub fn gaunt_exact(l: [i64; 3], m: [i64; 3]) -> SqrtRational {
    if l.iter().any(|&x| x < 0) || l.iter().sum::<i64>() % 2 != 0 || m.iter().sum::<i64>() != 0 {
        return SqrtRational::zero();
    }
    let two_l = l.map(|x| 2 * x);
    let (Ok(zero), Ok(mag)) = (ThreeJLabel::new(two_l, [0, 0, 0]), ThreeJLabel::new(two_l, m.map(|x| 2 * x)))
    else {
        return SqrtRational::zero();
    };
    let dims: i64 = l.iter().map(|&x| 2 * x + 1).product();
    let root = SqrtRational::sqrt_of(BigRational::from_integer(dims.into())).expect("positive");
    &(&root * &wigner_3j(&zero)) * &wigner_3j(&mag)
}

/// Integral of `Y_{l1 m1} Y_{l2 m2} Y_{l3 m3}` over the unit sphere.
pub fn gaunt(l1: i64, m1: i64, l2: i64, m2: i64, l3: i64, m3: i64) -> f64 {
    gaunt_exact([l1, l2, l3], [m1, m2, m3]).to_f64() / (4.0 * PI).sqrt()
}
