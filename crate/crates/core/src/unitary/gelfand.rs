use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{GfError, Result};

/// Highest weight `[h_1n .. h_nn]` of a U(n) irrep, non-increasing and
/// non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    h: Vec<i64>,
}

impl IrrepLabel {
    pub fn new(h: Vec<i64>) -> Result<Self> {
        if h.is_empty() {
            return Err(GfError::Domain("irrep label needs at least one entry".into()));
        }
        if h.iter().any(|&x| x < 0) {
            return Err(GfError::Domain("irrep label entries must be non-negative".into()));
        }
        if h.windows(2).any(|w| w[0] < w[1]) {
            return Err(GfError::Domain(format!("irrep label {h:?} is not non-increasing")));
        }
        Ok(IrrepLabel { h })
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.h
    }
}

/// Triangular Gel'fand pattern; `rows[0]` is the irrep label (length n) and
/// each following row is one shorter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GelfandPattern {
    rows: Vec<Vec<i64>>,
}

impl GelfandPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GfError::Domain("empty pattern".into()));
        }
        for (k, r) in rows.iter().enumerate() {
            if r.len() != n - k {
                return Err(GfError::Domain(format!("row {} has length {}, expected {}", k + 1, r.len(), n - k)));
            }
        }
        IrrepLabel::new(rows[0].clone())?;
        for k in 0..n - 1 {
            for i in 0..rows[k + 1].len() {
                if !(rows[k][i] >= rows[k + 1][i] && rows[k + 1][i] >= rows[k][i + 1]) {
                    return Err(GfError::Domain(format!("betweenness fails at row {}, entry {}", k + 2, i + 1)));
                }
            }
        }
        Ok(GelfandPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn label(&self) -> IrrepLabel {
        IrrepLabel { h: self.rows[0].clone() }
    }

    /// `h_{m,l}`: entry `m` (1-based) of the row of length `l`.
    pub fn h(&self, m: usize, l: usize) -> i64 {
        self.rows[self.n() - l][m - 1]
    }

    /// `L_l^m = h_{m,l} - h_{m,l-1}` for `m < l`, and `L_l^l = h_{l,l}`.
    pub fn big_l(&self, l: usize, m: usize) -> i64 {
        if m == l {
            self.h(l, l)
        } else {
            self.h(m, l) - self.h(m, l - 1)
        }
    }

    /// `R_l^m = h_{m,l-1} - h_{m+1,l}` for `1 <= m < l`.
    pub fn big_r(&self, l: usize, m: usize) -> i64 {
        self.h(m, l - 1) - self.h(m + 1, l)
    }

    /// The pattern with every row below the top maximal.
    pub fn highest(label: &IrrepLabel) -> GelfandPattern {
        let n = label.n();
        let rows = (0..n).map(|k| label.h[..n - k].to_vec()).collect();
        GelfandPattern { rows }
    }

    /// The pattern restricted to its lower `l` rows, a U(l) pattern.
    pub fn truncate(&self, l: usize) -> GelfandPattern {
        GelfandPattern { rows: self.rows[self.n() - l..].to_vec() }
    }
}

impl fmt::Display for GelfandPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Parses `"2 1 0 / 2 1 / 1"`; newlines also separate rows.
impl FromStr for GelfandPattern {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['/', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|x| x.parse::<i64>().map_err(|e| GfError::Parse(format!("{x:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GelfandPattern::new(rows)
    }
}

fn extend(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GelfandPattern>) {
    let last = rows.last().expect("at least the top row");
    if last.len() == 1 {
        out.push(GelfandPattern { rows: rows.clone() });
        return;
    }
    let m = last.len() - 1;
    let bounds: Vec<(i64, i64)> = (0..m).map(|i| (last[i + 1], last[i])).collect();
    let mut next = bounds.iter().map(|b| b.1).collect::<Vec<_>>();
    // odometer over the betweenness box, largest values first
    loop {
        rows.push(next.clone());
        extend(rows, out);
        rows.pop();
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if next[i] > bounds[i].0 {
                next[i] -= 1;
                for j in i + 1..m {
                    next[j] = bounds[j].1;
                }
                break;
            }
        }
    }
}

/// All patterns with top row `label`, in decreasing lexicographic order of
/// the rows read top to bottom (the highest-weight pattern first).
pub fn gelfand_enumerate(label: &IrrepLabel) -> Vec<GelfandPattern> {
    let mut out = Vec::new();
    let mut rows = vec![label.h.clone()];
    extend(&mut rows, &mut out);
    out
}

/// Weyl's product formula.
pub fn weyl_dimension(label: &IrrepLabel) -> BigInt {
    let n = label.n() as i64;
    let p: Vec<i64> = label.h.iter().enumerate().map(|(i, &h)| h + n - 1 - i as i64).collect();
    let mut num = BigInt::one();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            num *= p[i] - p[j];
        }
    }
    let den: BigInt = (1..n as u64).map(|k| BigInt::from(factorial(k))).product();
    let q = BigRational::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Weight `w_i = (sum of row of length i) - (sum of row of length i-1)`.
pub fn pattern_weight(p: &GelfandPattern) -> Vec<i64> {
    let n = p.n();
    let sum = |l: usize| -> i64 {
        if l == 0 {
            0
        } else {
            p.rows[n - l].iter().sum()
        }
    };
    (1..=n).map(|l| sum(l) - sum(l - 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(h: &[i64]) -> IrrepLabel {
        IrrepLabel::new(h.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_dimensions() {
        assert_eq!(gelfand_enumerate(&lab(&[1, 0])).len(), 2);
        assert_eq!(gelfand_enumerate(&lab(&[2, 1, 0])).len(), 8);
        assert_eq!(gelfand_enumerate(&lab(&[1, 0, 0, 0])).len(), 4);
        assert_eq!(weyl_dimension(&lab(&[0, 0, 0])), BigInt::from(1));
        assert_eq!(weyl_dimension(&lab(&[1, 0, 0])), BigInt::from(3));
        assert_eq!(weyl_dimension(&lab(&[2, 1, 0])), BigInt::from(8));
    }

    #[test]
    fn extreme_weights() {
        let all = gelfand_enumerate(&lab(&[2, 1, 0]));
        assert_eq!(pattern_weight(&all[0]), vec![2, 1, 0]);
        assert_eq!(pattern_weight(all.last().unwrap()), vec![0, 1, 2]);
    }

    #[test]
    fn text_round_trip() {
        let p: GelfandPattern = "2 1 0 / 2 0 / 1".parse().unwrap();
        assert_eq!(p.to_string(), "2 1 0 / 2 0 / 1");
        assert!("2 1 0 / 0 1 / 1".parse::<GelfandPattern>().is_err());
    }
}
