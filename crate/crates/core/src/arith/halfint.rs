use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An integer or half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    two: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { two: 0 };

    pub const fn from_doubled(two: i64) -> Self {
        HalfInt { two }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { two: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.two
    }

    pub const fn is_integer(self) -> bool {
        self.two % 2 == 0
    }

    /// The integer value, if this is one.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.two / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.two as f64 / 2.0
    }

    pub fn abs(self) -> Self {
        HalfInt { two: self.two.abs() }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { two: self.two + o.two }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { two: self.two - o.two }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { two: -self.two }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.two / 2)
        } else {
            write!(f, "{}/2", self.two)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arith() {
        let h = HalfInt::from_doubled(3);
        assert_eq!(h.to_string(), "3/2");
        assert_eq!((h + HalfInt::from_doubled(1)).to_string(), "2");
        assert_eq!((-h).doubled(), -3);
        assert_eq!(HalfInt::from_int(2).as_int(), Some(2));
        assert_eq!(h.as_int(), None);
    }
}
