use std::fmt;

use crate::projcat::{star_dual, ProjMorphism, ProjObject};

use super::TheoremError;

/// A composable sequence `X_0 → X_1 → ⋯ → X_k` of morphisms of `proj Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismChain {
    morphisms: Vec<ProjMorphism>,
}

impl MorphismChain {
    pub fn new(morphisms: Vec<ProjMorphism>) -> Result<MorphismChain, TheoremError> {
        if morphisms.windows(2).any(|w| w[0].target() != w[1].source()) {
            return Err(TheoremError::NotComposable);
        }
        Ok(MorphismChain { morphisms })
    }

    pub fn morphisms(&self) -> &[ProjMorphism] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn first(&self) -> Option<&ProjMorphism> {
        self.morphisms.first()
    }

    pub fn last(&self) -> Option<&ProjMorphism> {
        self.morphisms.last()
    }

    /// Target of the last morphism.
    pub fn terminal(&self) -> Option<&ProjObject> {
        self.morphisms.last().map(ProjMorphism::target)
    }

    /// Source of the first morphism.
    pub fn initial(&self) -> Option<&ProjObject> {
        self.morphisms.first().map(ProjMorphism::source)
    }

    /// Every consecutive composite vanishes.
    pub fn is_complex(&self) -> bool {
        self.morphisms
            .windows(2)
            .all(|w| w[1].compose(&w[0]).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// Image under `(-)^*`: every morphism dualized, order reversed.
    pub fn dual(&self) -> MorphismChain {
        MorphismChain {
            morphisms: self.morphisms.iter().rev().map(star_dual).collect(),
        }
    }
}

impl fmt::Display for MorphismChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.initial() {
            None => write!(f, "(empty chain)"),
            Some(start) => {
                write!(f, "{start}")?;
                for m in &self.morphisms {
                    write!(f, " -> {}", m.target())?;
                }
                Ok(())
            }
        }
    }
}
