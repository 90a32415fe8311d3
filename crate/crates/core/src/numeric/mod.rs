//! Quadrature rules used by the numeric oracles.

mod quadrature;

pub use quadrature::{gauss_hermite, gauss_laguerre, gauss_legendre, integrate_adaptive, integrate_panels, GaussRule};
