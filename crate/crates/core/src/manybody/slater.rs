use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::fock::{FockVector, TwoBody, MAX_ORBITALS};
use crate::error::{GfError, Result};

/// Overlaps below this magnitude are treated as vanishing.
pub const OVERLAP_FLOOR: f64 = 1e-12;

/// Reference determinant |Phi> = a_0^+ ... a_{n-1}^+ |0> in M orbitals and a
/// one-body transformation R with U a_j^+ U^{-1} = sum_i R_ij a_i^+.
#[derive(Debug, Clone, PartialEq)]
pub struct SlaterSystem {
    orbitals: usize,
    n_occ: usize,
    r: DMatrix<Complex64>,
}

impl SlaterSystem {
    pub fn new(orbitals: usize, n_occ: usize, r: DMatrix<Complex64>) -> Result<Self> {
        if orbitals > MAX_ORBITALS || n_occ > orbitals {
            return Err(GfError::Domain(format!("need n_occ <= M <= {MAX_ORBITALS}, got n_occ={n_occ}, M={orbitals}")));
        }
        if r.shape() != (orbitals, orbitals) {
            return Err(GfError::Domain(format!("R must be {orbitals} x {orbitals}, got {:?}", r.shape())));
        }
        Ok(Self { orbitals, n_occ, r })
    }

    pub fn orbitals(&self) -> usize {
        self.orbitals
    }

    pub fn n_occ(&self) -> usize {
        self.n_occ
    }

    pub fn transformation(&self) -> &DMatrix<Complex64> {
        &self.r
    }

    /// A_ij = <a_i|R|a_j> over occupied orbitals.
    pub fn occupied_block(&self) -> DMatrix<Complex64> {
        self.r.view((0, 0), (self.n_occ, self.n_occ)).into_owned()
    }

    fn inverse_block(&self) -> Result<(DMatrix<Complex64>, Complex64)> {
        let a = self.occupied_block();
        let det = a.determinant();
        if det.norm() < OVERLAP_FLOOR {
            return Err(GfError::Singular);
        }
        let inv = a.try_inverse().ok_or(GfError::Singular)?;
        Ok((inv, det))
    }

    /// Transition amplitudes X = R[:, occ] A^{-1}; row k, column i is
    /// <Phi|a_i^+ a_k U|Phi> / <Phi|U|Phi>.
    pub fn transition_matrix(&self) -> Result<DMatrix<Complex64>> {
        let (inv, _) = self.inverse_block()?;
        Ok(self.r.columns(0, self.n_occ) * inv)
    }

    /// U|Phi> expanded on the full Fock space.
    pub fn transformed_reference(&self) -> Result<FockVector> {
        let occ: Vec<usize> = (0..self.n_occ).collect();
        FockVector::transformed_product(self.orbitals, &occ, &self.r)
    }

    pub fn reference(&self) -> Result<FockVector> {
        FockVector::reference(self.orbitals, self.n_occ)
    }
}

/// <Phi|U|Phi> = det A.
pub fn slater_overlap(sys: &SlaterSystem) -> Complex64 {
    sys.occupied_block().determinant()
}

/// <Phi| T U |Phi> = det A sum_ij (T R)_ij A^{-1}_ji over occupied i, j.
pub fn lowdin_matrix_element(sys: &SlaterSystem, t: &DMatrix<Complex64>) -> Result<Complex64> {
    check_square(t, sys.orbitals)?;
    let (inv, det) = sys.inverse_block()?;
    let tr = t * sys.transformation();
    let n = sys.n_occ;
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            sum += tr[(i, j)] * inv[(j, i)];
        }
    }
    Ok(sum * det)
}

/// <Phi| V U |Phi> for V = (1/4) sum v_ijkl a_i^+ a_j^+ a_l a_k:
/// (1/4) det A sum over occupied ijkl of <a_i a_j|V R|a_k a_l> times the
/// 2x2 minor (A^{-1}_ki A^{-1}_lj - A^{-1}_kj A^{-1}_li).
pub fn lowdin_two_body(sys: &SlaterSystem, v: &TwoBody) -> Result<Complex64> {
    let m = sys.orbitals;
    if v.orbitals() != m {
        return Err(GfError::Domain(format!("interaction has {} orbitals, system {m}", v.orbitals())));
    }
    let (inv, det) = sys.inverse_block()?;
    let r = sys.transformation();
    let n = sys.n_occ;
    // <a_i a_j|V R|a_k a_l> = sum_pq v_ijpq R_pk R_ql
    let mut sum = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let minor = inv[(k, i)] * inv[(l, j)] - inv[(k, j)] * inv[(l, i)];
                    if minor == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let mut elem = Complex64::new(0.0, 0.0);
                    for p in 0..m {
                        for q in 0..m {
                            elem += v.get(i, j, p, q) * r[(p, k)] * r[(q, l)];
                        }
                    }
                    sum += elem * minor;
                }
            }
        }
    }
    Ok(sum * det * 0.25)
}

/// Brute-force <Phi| T U |Phi> on the Fock space.
pub fn fock_one_body_element(sys: &SlaterSystem, t: &DMatrix<Complex64>) -> Result<Complex64> {
    check_square(t, sys.orbitals)?;
    let u_phi = sys.transformed_reference()?;
    Ok(sys.reference()?.inner(&u_phi.apply_one_body(t)))
}

/// Brute-force <Phi| V U |Phi> on the Fock space.
pub fn fock_two_body_element(sys: &SlaterSystem, v: &TwoBody) -> Result<Complex64> {
    let u_phi = sys.transformed_reference()?;
    Ok(sys.reference()?.inner(&u_phi.apply_two_body(v)))
}

fn check_square(t: &DMatrix<Complex64>, m: usize) -> Result<()> {
    if t.shape() != (m, m) {
        return Err(GfError::Domain(format!("operator must be {m} x {m}, got {:?}", t.shape())));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThoulessReport {
    /// x(k, i) for unoccupied k (rows, offset by n_occ) and occupied i.
    pub x: DMatrix<Complex64>,
    pub overlap: Complex64,
    /// Nonvanishing terms of the exponential series, including the identity.
    pub terms: usize,
    pub residual: f64,
}

/// Compares U|Phi> with <Phi|U|Phi> exp(sum x(k,i) b_k^+ a_i)|Phi>, summing
/// the exponential until a power annihilates the reference.
pub fn thouless(sys: &SlaterSystem) -> Result<ThoulessReport> {
    let n = sys.n_occ;
    let m = sys.orbitals;
    let full = sys.transition_matrix()?;
    let x = full.rows(n, m - n).into_owned();
    let overlap = slater_overlap(sys);
    let mut ph = DMatrix::zeros(m, m);
    for k in n..m {
        for i in 0..n {
            ph[(k, i)] = x[(k - n, i)];
        }
    }
    let mut term = sys.reference()?;
    let mut series = FockVector::zero(m)?;
    let mut terms = 0;
    let mut order = 0.0;
    while !term.is_exact_zero() {
        series = series.add(&term);
        terms += 1;
        order += 1.0;
        term = term.apply_one_body(&ph).scale(Complex64::new(1.0 / order, 0.0));
    }
    let residual = sys.transformed_reference()?.sub(&series.scale(overlap)).norm();
    Ok(ThoulessReport { x, overlap, terms, residual })
}

pub fn thouless_residual(sys: &SlaterSystem) -> Result<f64> {
    Ok(thouless(sys)?.residual)
}

/// Seeded unitary Q from the QR factorization of I + scale G, G complex
/// Gaussian; small `scale` stays near the identity.
pub fn random_unitary(m: usize, scale: f64, seed: u64) -> DMatrix<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::from_fn(m, m, |i, j| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0) + Complex64::new(re, im) * scale
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    // fix the phase freedom so that diag(R) is positive
    for j in 0..m {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..m {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_transformation() {
        let sys = SlaterSystem::new(4, 2, DMatrix::identity(4, 4)).unwrap();
        assert_eq!(slater_overlap(&sys), Complex64::new(1.0, 0.0));
        let n = lowdin_matrix_element(&sys, &DMatrix::identity(4, 4)).unwrap();
        assert!((n - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        let rep = thouless(&sys).unwrap();
        assert_eq!(rep.terms, 1);
        assert_eq!(rep.residual, 0.0);
    }

    #[test]
    fn unitary_is_unitary() {
        let q = random_unitary(5, 0.3, 1);
        assert!((q.adjoint() * &q - DMatrix::identity(5, 5)).norm() < 1e-12);
    }
}
