//! Exact dense linear algebra over `Q` and `F_p`.

mod matrix;
mod scalar;

pub use matrix::{Matrix, Rref, Side};
pub use scalar::{Field, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("matrix is not square: {0:?}")]
    NotSquare((usize, usize)),
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
}
