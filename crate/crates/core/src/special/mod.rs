//! Orthogonal polynomials, spherical and hyperspherical harmonics, hydrogen
//! wavefunctions in both representations and generating-function checks.

mod bessel;
mod gamma;
mod genfunc;
mod harmonics;
mod hydrogen;
mod orthopoly;

pub use bessel::bessel_j;
pub use gamma::{gamma, ln_gamma};
pub use genfunc::{genfunc_residual, GenFunc, DEFAULT_GENFUNC_ORDER};
pub use harmonics::{hyperspherical_harmonic, spherical_harmonic};
pub use hydrogen::{
    fourier_momentum_oracle, hankel_transform, hydrogen_momentum_wf, hydrogen_position_wf, momentum_norm, position_norm,
    laguerre_scaled_norm_ratio_3d, radial_cutoff, HydrogenState,
};
pub use orthopoly::{
    derivative_coefficients, gegenbauer, gegenbauer_norm_sq, hermite, laguerre, laguerre_coefficients, legendre, poly_eval, Family,
    PolyFamily,
};
