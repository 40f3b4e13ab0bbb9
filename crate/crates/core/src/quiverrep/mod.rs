//! Path algebras of quivers with admissible relations, and their finite-dimensional
//! representations.
//!
//! Convention: `mod Λ` is the category of representations of the quiver of `Λ`
//! (a vector space per vertex, a linear map per arrow, paths act by applying
//! their arrows in order). `mod Λ^op` is then the category of representations
//! of the reversed quiver.

mod algebra;
mod module;
mod quiver;

pub use algebra::{same_algebra, Coords, Orientation, Path, PathAlgebra, Relation, DEFAULT_PATH_CAP};
pub use module::{
    cokernel_mod, free_module, hom_basis, image_mod, kernel_mod, morphism_from_generators, projective_cover,
    projective_of, simple_of, Module, ModuleMorphism, ProjLayout, ProjectiveCover,
};
pub use quiver::{Arrow, Quiver};

use thiserror::Error;

use crate::exactla::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow name {0:?}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("relation {relation} has a term of length < 2")]
    NonAdmissible { relation: usize },
    #[error("relation {relation} contains a non-composable word")]
    NotComposable { relation: usize },
    #[error("relation {relation} mixes paths with different endpoints")]
    NotParallel { relation: usize },
    #[error("relation {relation} has coefficients in the wrong field")]
    FieldMismatch { relation: usize },
    #[error("reduction system is not confluent: ambiguity at word [{word}] does not resolve")]
    NonConfluent { word: String },
    #[error("irreducible paths longer than the cap {cap}: algebra is not finite-dimensional")]
    Infinite { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("wrong number of vertex spaces or arrow maps")]
    WrongArity,
    #[error("arrow map {arrow} has the wrong shape")]
    ArrowShape { arrow: usize },
    #[error("vertex map {vertex} has the wrong shape")]
    VertexShape { vertex: usize },
    #[error("relation {relation} does not vanish")]
    RelationViolated { relation: usize },
    #[error("square at arrow {arrow} does not commute")]
    NotCommuting { arrow: usize },
    #[error("subspace is not invariant under arrow {arrow}")]
    NotInvariant { arrow: usize },
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error("matrix entries over the wrong field")]
    FieldMismatch,
    #[error("morphisms are not composable")]
    NotComposable,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
