//! Generating-function toolkit: exact SU(2) recoupling coefficients, U(n) and
//! SU(3) representation machinery, Hurwitz quadratic maps, hydrogen and
//! oscillator kernels, and Slater-determinant algebra.

pub mod arith;
pub mod error;
pub mod hurwitz;
pub mod manybody;
pub mod numeric;
pub mod oscillator;
pub mod poly;
pub mod series;
pub mod special;
pub mod unitary;
pub mod wigner;

pub use arith::{HalfInt, Rational, SqrtRational};
pub use error::{GfError, Result};
