use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{GfError, Result};

/// Largest orbital count the dense oracle accepts.
pub const MAX_ORBITALS: usize = 10;

/// Dense vector over all 2^M occupation bitmasks. Bit i set means orbital i
/// is occupied; creation operators are ordered by orbital index.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    orbitals: usize,
    amps: Vec<Complex64>,
}

fn sign_below(mask: usize, i: usize) -> f64 {
    if (mask & ((1 << i) - 1)).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl FockVector {
    pub fn zero(orbitals: usize) -> Result<Self> {
        if orbitals > MAX_ORBITALS {
            return Err(GfError::Unsupported(format!("at most {MAX_ORBITALS} orbitals, got {orbitals}")));
        }
        Ok(Self { orbitals, amps: vec![Complex64::new(0.0, 0.0); 1 << orbitals] })
    }

    pub fn vacuum(orbitals: usize) -> Result<Self> {
        let mut v = Self::zero(orbitals)?;
        v.amps[0] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    /// a_0^+ a_1^+ ... a_{n-1}^+ |0>.
    pub fn reference(orbitals: usize, n_occ: usize) -> Result<Self> {
        let mut v = Self::zero(orbitals)?;
        v.amps[(1 << n_occ) - 1] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn orbitals(&self) -> usize {
        self.orbitals
    }

    pub fn amplitude(&self, mask: usize) -> Complex64 {
        self.amps[mask]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn is_exact_zero(&self) -> bool {
        self.amps.iter().all(|a| a.re == 0.0 && a.im == 0.0)
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// <self|other>.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { orbitals: self.orbitals, amps: self.amps.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { orbitals: self.orbitals, amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn create(&self, i: usize) -> Self {
        let mut out = Self { orbitals: self.orbitals, amps: vec![Complex64::new(0.0, 0.0); self.amps.len()] };
        for (mask, &a) in self.amps.iter().enumerate() {
            if mask & (1 << i) == 0 && a != Complex64::new(0.0, 0.0) {
                out.amps[mask | (1 << i)] += a * sign_below(mask, i);
            }
        }
        out
    }

    pub fn annihilate(&self, i: usize) -> Self {
        let mut out = Self { orbitals: self.orbitals, amps: vec![Complex64::new(0.0, 0.0); self.amps.len()] };
        for (mask, &a) in self.amps.iter().enumerate() {
            if mask & (1 << i) != 0 && a != Complex64::new(0.0, 0.0) {
                out.amps[mask ^ (1 << i)] += a * sign_below(mask, i);
            }
        }
        out
    }

    /// sum_ij t_ij a_i^+ a_j applied to self.
    pub fn apply_one_body(&self, t: &DMatrix<Complex64>) -> Self {
        let m = self.orbitals;
        let mut out = Self { orbitals: m, amps: vec![Complex64::new(0.0, 0.0); self.amps.len()] };
        for j in 0..m {
            let aj = self.annihilate(j);
            if aj.is_exact_zero() {
                continue;
            }
            for i in 0..m {
                if t[(i, j)] != Complex64::new(0.0, 0.0) {
                    out = out.add(&aj.create(i).scale(t[(i, j)]));
                }
            }
        }
        out
    }

    /// (1/4) sum_ijkl v_ijkl a_i^+ a_j^+ a_l a_k applied to self.
    pub fn apply_two_body(&self, v: &TwoBody) -> Self {
        let m = self.orbitals;
        let mut out = Self { orbitals: m, amps: vec![Complex64::new(0.0, 0.0); self.amps.len()] };
        for k in 0..m {
            for l in 0..m {
                let lk = self.annihilate(k).annihilate(l);
                if lk.is_exact_zero() {
                    continue;
                }
                for i in 0..m {
                    for j in 0..m {
                        let c = v.get(i, j, k, l);
                        if c != Complex64::new(0.0, 0.0) {
                            out = out.add(&lk.create(j).create(i).scale(c * 0.25));
                        }
                    }
                }
            }
        }
        out
    }

    /// U(R) |self> for a product state given as an ordered list of
    /// occupied orbitals: U a_j^+ U^{-1} = sum_i R_ij a_i^+.
    pub fn transformed_product(orbitals: usize, occupied: &[usize], r: &DMatrix<Complex64>) -> Result<Self> {
        let mut v = Self::vacuum(orbitals)?;
        for &j in occupied.iter().rev() {
            let mut next = Self::zero(orbitals)?;
            for i in 0..orbitals {
                if r[(i, j)] != Complex64::new(0.0, 0.0) {
                    next = next.add(&v.create(i).scale(r[(i, j)]));
                }
            }
            v = next;
        }
        Ok(v)
    }
}

/// Antisymmetrized two-body matrix elements <ij|V|kl>, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoBody {
    orbitals: usize,
    elems: Vec<Complex64>,
}

impl TwoBody {
    /// Antisymmetrizes `raw(i,j,k,l)` in both index pairs.
    pub fn antisymmetrized(orbitals: usize, raw: impl Fn(usize, usize, usize, usize) -> Complex64) -> Self {
        let m = orbitals;
        let mut elems = vec![Complex64::new(0.0, 0.0); m.pow(4)];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        elems[((i * m + j) * m + k) * m + l] = (raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) + raw(j, i, l, k)) * 0.5;
                    }
                }
            }
        }
        Self { orbitals, elems }
    }

    pub fn orbitals(&self) -> usize {
        self.orbitals
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        let m = self.orbitals;
        self.elems[((i * m + j) * m + k) * m + l]
    }
}
