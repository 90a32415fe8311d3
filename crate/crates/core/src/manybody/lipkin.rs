use nalgebra::DMatrix;

use crate::error::{GfError, Result};

/// Two-level model H = e J0 + (V/2)(J+^2 + J-^2) for N particles, J = N/2,
/// on the basis |n>, n = 0..N, with J0|n> = (n - J)|n>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LipkinModel {
    n_particles: u32,
    pub e: f64,
    pub v: f64,
}

impl LipkinModel {
    pub fn new(n_particles: u32, e: f64, v: f64) -> Result<Self> {
        if n_particles < 2 || n_particles % 2 != 0 {
            return Err(GfError::Domain(format!("particle number must be even and >= 2, got {n_particles}")));
        }
        Ok(Self { n_particles, e, v })
    }

    pub fn n_particles(&self) -> u32 {
        self.n_particles
    }

    pub fn j(&self) -> f64 {
        self.n_particles as f64 / 2.0
    }

    pub fn dim(&self) -> usize {
        self.n_particles as usize + 1
    }

    /// <n+1|J+|n> = sqrt((2J - n)(n + 1)).
    pub fn raising_element(&self, n: usize) -> f64 {
        let two_j = self.n_particles as f64;
        ((two_j - n as f64) * (n as f64 + 1.0)).max(0.0).sqrt()
    }
}

/// Exact Hamiltonian matrix; couples n to n +- 2 only.
pub fn lipkin_hamiltonian(model: &LipkinModel) -> DMatrix<f64> {
    let d = model.dim();
    let mut h = DMatrix::zeros(d, d);
    for n in 0..d {
        h[(n, n)] = model.e * (n as f64 - model.j());
        if n + 2 < d {
            let elem = 0.5 * model.v * model.raising_element(n) * model.raising_element(n + 1);
            h[(n + 2, n)] = elem;
            h[(n, n + 2)] = elem;
        }
    }
    h
}

fn sorted_eigenvalues(h: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Sorted exact eigenvalues.
pub fn lipkin_spectrum(model: &LipkinModel) -> Vec<f64> {
    sorted_eigenvalues(lipkin_hamiltonian(model))
}

/// Coefficients c_0..c_{k_max} of sum_k c_k Z^{k+s} d^k reproducing a
/// prescribed diagonal action: sum_{k<=m} c_k m!/(m-k)! = target(m).
fn falling_series(k_max: usize, target: impl Fn(usize) -> f64) -> Vec<f64> {
    let mut c: Vec<f64> = Vec::with_capacity(k_max + 1);
    for m in 0..=k_max {
        // falling factorial m!/(m-k)! built up incrementally
        let mut ff = 1.0;
        let mut known = 0.0;
        for (k, ck) in c.iter().enumerate() {
            known += ck * ff;
            ff *= (m - k) as f64;
        }
        c.push((target(m) - known) / ff);
    }
    c
}

/// alpha_k of J+ = sum_k alpha_k Z^{k+1} d^k: alpha_0 = sqrt(2J),
/// alpha_1 = sqrt(2J - 1) - sqrt(2J).
pub fn lipkin_alpha(model: &LipkinModel, k_max: usize) -> Vec<f64> {
    let two_j = model.n_particles as f64;
    falling_series(k_max, |m| (two_j - m as f64).max(0.0).sqrt())
}

/// beta_k of J+^2 = sum_k beta_k Z^{k+2} d^k: beta_0 = sqrt(2J(2J - 1)).
pub fn lipkin_beta(model: &LipkinModel, k_max: usize) -> Vec<f64> {
    let two_j = model.n_particles as f64;
    falling_series(k_max, |m| ((two_j - m as f64) * (two_j - m as f64 - 1.0)).max(0.0).sqrt())
}

/// Particle-hole boson coefficients solving, for n = 1..k_max+1,
/// sum_{k<n} (-1)^k n!/(n-k-1)! alpha_k = n sqrt(n).
pub fn boson_expansion_coeffs(k_max: usize) -> Vec<f64> {
    let mut alpha: Vec<f64> = Vec::with_capacity(k_max + 1);
    for n in 1..=k_max + 1 {
        let mut known = 0.0;
        for (k, a) in alpha.iter().enumerate() {
            known += boson_recurrence_weight(n, k) * a;
        }
        let last = boson_recurrence_weight(n, n - 1);
        alpha.push((n as f64 * (n as f64).sqrt() - known) / last);
    }
    alpha
}

/// (-1)^k n!/(n-k-1)!, the weight of alpha_k in the n-th equation.
pub fn boson_recurrence_weight(n: usize, k: usize) -> f64 {
    let ff: f64 = (n - k..=n).map(|v| v as f64).product();
    if k % 2 == 0 {
        ff
    } else {
        -ff
    }
}

/// Truncated images on the normalized monomials Z^i/sqrt(i!), i < dim. The
/// matrices act like the fermion operators they represent: entry (i', i) is
/// the image of |i> on |i'>.
#[derive(Debug, Clone, PartialEq)]
pub struct LipkinBosonImages {
    pub truncation: usize,
    pub j0: DMatrix<f64>,
    pub j_plus: DMatrix<f64>,
    pub j_minus: DMatrix<f64>,
    pub j_plus_sq: DMatrix<f64>,
    pub j_minus_sq: DMatrix<f64>,
    pub hamiltonian: DMatrix<f64>,
}

impl LipkinBosonImages {
    pub fn spectrum(&self) -> Vec<f64> {
        sorted_eigenvalues(self.hamiltonian.clone())
    }

    /// max |([J+, J-] - 2 J0)_{ab}| over the first `states` basis vectors.
    pub fn commutator_defect(&self, states: usize) -> f64 {
        let c = &self.j_plus * &self.j_minus - &self.j_minus * &self.j_plus - &self.j0 * 2.0;
        let s = states.min(c.nrows());
        c.view((0, 0), (s, s)).amax()
    }
}

/// Images keeping the first `truncation` terms of the alpha and beta series,
/// on the N + 1 lowest boson states.
pub fn lipkin_boson_images(model: &LipkinModel, truncation: usize) -> Result<LipkinBosonImages> {
    lipkin_boson_images_dim(model, truncation, model.dim())
}

pub fn lipkin_boson_images_dim(model: &LipkinModel, truncation: usize, dim: usize) -> Result<LipkinBosonImages> {
    if truncation < 1 {
        return Err(GfError::Domain("truncation must be at least 1".into()));
    }
    if dim < 1 {
        return Err(GfError::Domain("boson space needs at least one state".into()));
    }
    let alpha = lipkin_alpha(model, truncation - 1);
    let beta = lipkin_beta(model, truncation - 1);
    let series = |c: &[f64], m: usize| -> f64 {
        let mut ff = 1.0;
        let mut total = 0.0;
        for (k, ck) in c.iter().enumerate().take(m + 1) {
            total += ck * ff;
            ff *= (m - k) as f64;
        }
        total
    };
    let mut j0 = DMatrix::zeros(dim, dim);
    let mut j_plus = DMatrix::zeros(dim, dim);
    let mut j_plus_sq = DMatrix::zeros(dim, dim);
    for m in 0..dim {
        let mf = m as f64;
        j0[(m, m)] = mf - model.j();
        if m + 1 < dim {
            j_plus[(m + 1, m)] = series(&alpha, m) * (mf + 1.0).sqrt();
        }
        if m + 2 < dim {
            j_plus_sq[(m + 2, m)] = series(&beta, m) * ((mf + 1.0) * (mf + 2.0)).sqrt();
        }
    }
    let j_minus = j_plus.transpose();
    let j_minus_sq = j_plus_sq.transpose();
    let hamiltonian = &j0 * model.e + (&j_plus_sq + &j_minus_sq) * (0.5 * model.v);
    Ok(LipkinBosonImages { truncation, j0, j_plus, j_minus, j_plus_sq, j_minus_sq, hamiltonian })
}

/// |(E_1 - E_0) truncated - (E_1 - E_0) exact|.
pub fn lipkin_gap_error(model: &LipkinModel, truncation: usize) -> Result<f64> {
    let exact = lipkin_spectrum(model);
    let approx = lipkin_boson_images(model, truncation)?.spectrum();
    Ok(((approx[1] - approx[0]) - (exact[1] - exact[0])).abs())
}
