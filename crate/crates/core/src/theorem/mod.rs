//! Construction of `n`-cokernels from `n`-kernels in `proj Λ`, together with
//! independent verification of weak (co)kernels, `n`-kernels and `n`-cokernels.
//!
//! For `n ≥ 1` the engine walks the chain `a_1, …, a_{n+1}` of weak cokernels,
//! takes an `n`-kernel `b_1, …, b_n` of `a_{n+1}`, lifts along it to get the
//! `c_i` and `d_i`, and splits the idempotent `d_{n+1} b_n`. The `n = 0` case
//! replaces the lifts with a split epimorphism onto the image of `a_1`.
//!
//! The converse direction is obtained by conjugating with `(-)^*`.

mod chain;
mod construct;
mod verify;
mod zero;

pub use chain::MorphismChain;
pub use construct::{
    compute_n_kernel, construct_n_cokernel, construct_n_cokernel_with, iterate_weak_cokernels, n_cokernel_by_duality,
    n_kernel_by_duality, ConstructionTrace, IdentityCheck, SplitStrategy,
};
pub use verify::{verify_n_cokernel, verify_n_kernel, verify_weak_cokernel, verify_weak_kernel};
pub use zero::{construct_0_cokernel, verify_0_cokernel, ZeroCokernelTrace};

use thiserror::Error;

use crate::projcat::CategoryError;

#[derive(Debug, Clone, Error)]
pub enum TheoremError {
    #[error("n must be at least {min}, got {n}")]
    InvalidN { n: usize, min: usize },
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("first map of the n-kernel chain is not a monomorphism (global dimension too large for n = {n})")]
    MonoFailure { n: usize },
    #[error("no lift exists at step {step}")]
    LiftFailure { step: String, trace: Box<ConstructionTrace> },
    #[error("0-kernel factorization failed: {0}")]
    SplitFailure(&'static str),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[cfg(test)]
mod tests;
