use thiserror::Error;

use crate::arith::HalfInt;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GfError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("triangle condition fails for ({0}, {1}, {2})")]
    Triangle(HalfInt, HalfInt, HalfInt),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is singular")]
    Singular,
    #[error("kernel evaluated on a caustic (sin vanishes)")]
    Caustic,
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("parameters outside the convergence region: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, GfError>;
