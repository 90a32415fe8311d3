//! Hurwitz matrices, quadratic maps between Euclidean spaces, Cayley
//! rotations and the 3-D and 7-D cross products.

mod cayley;
mod cross;
mod gaussian;
mod matrix;
mod quadmap;

pub use cayley::{cayley3_explicit, cayley_closed_form, cayley_rotation, skew_matrix};
pub use cross::{cross_product, v_matrix, v_matrix_properties, VReport};
pub use gaussian::{clifford_matrix, gegenbauer_gaussian_identity, GaussianIdentity};
pub use matrix::{cayley_dickson_mul, hurwitz_matrix, HurwitzMatrix, SignedVar};
pub use quadmap::{ks_transform, ks_transform_exact, laplacian, laplacian_pullback_residual, QuadMap};
