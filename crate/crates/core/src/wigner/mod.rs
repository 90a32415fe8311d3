//! Exact SU(2) recoupling coefficients.

mod gaunt;
mod ninej;
mod regge;
mod sixj;
mod threej;

pub use gaunt::{gaunt, gaunt_exact};
pub use ninej::{wigner_9j, wigner_9j_via_6j, NineJLabel};
pub use regge::regge_orbit;
pub use sixj::{
    sixj_symmetries, wigner_6j_fixed_m, wigner_6j_gf, wigner_6j_gf_with, wigner_6j_oracle, ColumnThree,
    SixJLabel,
};
pub use threej::{clebsch_gordan, labels_up_to, wigner_3j, ThreeJLabel};
