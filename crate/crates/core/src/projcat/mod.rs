//! The idempotent complete additive category `proj Λ`.
//!
//! Every categorical quantifier ("for every object X") is evaluated over the
//! indecomposable projectives `P(v)`: Hom is additive and each object is a
//! finite sum of them, so the restricted check is equivalent.

mod object;
mod ops;
pub mod sample;

pub use object::{post_composition_matrix, pre_composition_matrix, DirectSum, ProjMorphism, ProjObject};
pub use ops::{factor_through, image_factorization, is_epi_cat, is_mono_cat, split_idempotent, star_dual, weak_cokernel, weak_kernel, Splitting};

use thiserror::Error;

use crate::exactla::LinAlgError;
use crate::quiverrep::ModuleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("objects over different algebras")]
    AlgebraMismatch,
    #[error("morphisms are not composable or have different shapes")]
    NotComposable,
    #[error("morphism is not an endomorphism")]
    NotEndomorphism,
    #[error("morphism is not idempotent")]
    NotIdempotent,
    #[error("image is not projective")]
    NotProjective,
    #[error("internal consistency failure: {0}")]
    Internal(&'static str),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[cfg(test)]
mod tests;
