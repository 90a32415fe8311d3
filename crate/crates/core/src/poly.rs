//! Sparse multivariate polynomials over any numeric ring.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Num;

/// Polynomial in `nvars` variables; terms keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Num + Clone> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, T::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, T::one())
    }

    pub fn monomial(exps: Vec<u32>, c: T) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: T) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), T::zero() - c.clone());
        }
        out
    }

    pub fn scale(&self, k: &T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        self.mul_bounded(other, None)
    }

    /// Product keeping only terms whose exponents stay within `limit`
    /// (`None` entries are unbounded).
    pub fn mul_bounded(&self, other: &Poly<T>, limit: Option<&[Option<u32>]>) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            'terms: for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(self.nvars);
                for i in 0..self.nvars {
                    let s = ea[i] + eb[i];
                    if let Some(Some(l)) = limit.map(|l| l[i]) {
                        if s > l {
                            continue 'terms;
                        }
                    }
                    e.push(s);
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly<T> {
        self.pow_bounded(k, None)
    }

    pub fn pow_bounded(&self, k: u32, limit: Option<&[Option<u32>]>) -> Poly<T> {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul_bounded(self, limit);
        }
        out
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut k = T::zero();
            for _ in 0..e[i] {
                k = k + T::one();
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.clone() * k);
        }
        out
    }

    /// Substitutes polynomials (all in the same target ring) for each variable.
    pub fn compose(&self, subs: &[Poly<T>]) -> Poly<T> {
        assert_eq!(subs.len(), self.nvars, "one substitution per variable");
        let target = subs.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: Vec<Vec<Poly<T>>> = subs.iter().map(|s| vec![Poly::one(target), s.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("nonempty").mul(&subs[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates with a caller-supplied scalar type, e.g. `f64` coefficients at
    /// complex points.
    pub fn eval_with<S, F>(&self, x: &[S], conv: F) -> S
    where
        S: Num + Clone,
        F: Fn(&T) -> S,
    {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = conv(c);
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t * xi.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval(&self, x: &[T]) -> T {
        self.eval_with(x, |c| c.clone())
    }

    pub fn map_coeffs<U: Num + Clone, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<T: Num + Clone + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<T: Num + Clone> Default for Poly<T> {
    fn default() -> Self {
        Poly::zero(0)
    }
}
