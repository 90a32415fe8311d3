use std::fmt;

use crate::error::{GfError, Result};

/// A single-column binary filling (a word of zeros and ones of length n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BfrTable {
    bits: Vec<bool>,
}

impl BfrTable {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(GfError::Domain("empty table".into()));
        }
        Ok(BfrTable { bits })
    }

    /// Table whose ones sit at the given 1-based positions.
    pub fn from_positions(n: usize, ones: &[usize]) -> Result<Self> {
        let mut bits = vec![false; n];
        for &p in ones {
            if p == 0 || p > n {
                return Err(GfError::Domain(format!("position {p} outside 1..={n}")));
            }
            bits[p - 1] = true;
        }
        BfrTable::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> Vec<usize> {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for BfrTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    X,
    Y,
}

/// Parameter `x(lambda, mu)` or `y(lambda, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param {
    pub lambda: usize,
    pub mu: usize,
    pub kind: ParamKind,
}

impl Param {
    pub fn x(lambda: usize, mu: usize) -> Param {
        Param { lambda, mu, kind: ParamKind::X }
    }

    pub fn y(lambda: usize, mu: usize) -> Param {
        Param { lambda, mu, kind: ParamKind::Y }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            ParamKind::X => 'x',
            ParamKind::Y => 'y',
        };
        write!(f, "{c}({},{})", self.lambda, self.mu)
    }
}

/// Product of distinct parameters, kept sorted by `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamMonomial {
    factors: Vec<Param>,
}

impl ParamMonomial {
    pub fn new(mut factors: Vec<Param>) -> Self {
        factors.sort();
        ParamMonomial { factors }
    }

    pub fn factors(&self) -> &[Param] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

// Zeros after the first one give y(lambda, ones so far); ones after the
// first zero give x(lambda, ones so far + 1).
pub(crate) fn phi_factors(bits: &[bool]) -> Vec<Param> {
    let mut out = Vec::new();
    let mut ones = 0usize;
    let mut seen_one = false;
    let mut seen_zero = false;
    for (i, &b) in bits.iter().enumerate() {
        let lambda = i + 1;
        if b {
            if seen_zero {
                out.push(Param::x(lambda, ones + 1));
            }
            ones += 1;
            seen_one = true;
        } else {
            if seen_one {
                out.push(Param::y(lambda, ones));
            }
            seen_zero = true;
        }
    }
    out
}

/// The parameter monomial attached to a table; the all-ones table of length
/// n maps to `y(n,n)`.
pub fn bfr_phi(t: &BfrTable) -> ParamMonomial {
    let n = t.len();
    if t.weight() == n {
        return ParamMonomial::new(vec![Param::y(n, n)]);
    }
    ParamMonomial::new(phi_factors(&t.bits))
}

/// All nonzero tables of length `n` paired with their monomials, ordered by
/// weight then by positions of the ones.
pub fn bfr_generating_terms(n: usize) -> Result<Vec<(BfrTable, ParamMonomial)>> {
    if n == 0 || n > 20 {
        return Err(GfError::Domain(format!("table length {n} outside 1..=20")));
    }
    let mut out = Vec::new();
    for ones in minor_subsets(n) {
        let t = BfrTable::from_positions(n, &ones)?;
        let m = bfr_phi(&t);
        out.push((t, m));
    }
    Ok(out)
}

/// Nonempty subsets of `1..=n`, by size then lexicographically.
pub fn minor_subsets(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).flat_map(|k| (1..=n).combinations(k)).collect()
}

/// `"D13"`-style name of the minor on columns `cols` (single-digit columns are
/// concatenated, larger ones comma-separated).
pub fn minor_name(cols: &[usize]) -> String {
    if cols.iter().all(|&c| c < 10) {
        format!("D{}", cols.iter().map(|c| c.to_string()).collect::<String>())
    } else {
        format!("D{}", cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}
