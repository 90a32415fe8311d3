//! Gel'fand patterns, binary fundamental-representation coding, boson
//! polynomials of U(n) states and multiplicity-free SU(3) coupling.

mod bfr;
mod boson;
mod gelfand;
mod su3;

pub use bfr::{bfr_generating_terms, bfr_phi, minor_name, minor_subsets, BfrTable, Param, ParamKind, ParamMonomial};
pub use boson::{
    boson_polynomial, complex_minor, pn1, raw_coefficient_sum, u3_boson_polynomial, u4_boson_polynomial,
    BosonPolynomial,
};
pub use gelfand::{gelfand_enumerate, pattern_weight, weyl_dimension, GelfandPattern, IrrepLabel};
pub use su3::{
    su3_decompose_multfree, su3_dimension, su3_euler_matrix, su3_states, su3_wigner_multfree, Su3Label, Su3Wigner,
};
