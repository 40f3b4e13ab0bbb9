use std::fmt;

use crate::exactla::Side;
use crate::projcat::{factor_through, image_factorization, is_epi_cat, split_idempotent, weak_cokernel, CategoryError, ProjMorphism, ProjObject};

use super::TheoremError;

/// Intermediate morphisms of the `n = 0` construction.
#[derive(Clone, Debug)]
pub struct ZeroCokernelTrace {
    pub a0: ProjMorphism,
    /// Weak cokernel `a_1: A_1 → A_2` of `a_0`.
    pub a1: ProjMorphism,
    /// `a_1 = b c` with `b: B → A_2` the image inclusion.
    pub b: ProjMorphism,
    pub c: ProjMorphism,
    /// Section of `c`: `c r = 1`.
    pub r: ProjMorphism,
    /// `1 - r c`.
    pub idempotent: ProjMorphism,
    pub object: ProjObject,
    pub f: ProjMorphism,
    pub g: ProjMorphism,
}

impl fmt::Display for ZeroCokernelTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "construction trace (n = 0)")?;
        writeln!(f, "  a_0: {}", self.a0)?;
        writeln!(f, "  a_1: {}", self.a1)?;
        writeln!(f, "  b: {}", self.b)?;
        writeln!(f, "  c: {}", self.c)?;
        writeln!(f, "  r: {}", self.r)?;
        writeln!(f, "  1 - rc: {}", self.idempotent)?;
        writeln!(f, "  C: {}", self.object)?;
        writeln!(f, "  f: {}", self.f)?;
        writeln!(f, "  g: {}", self.g)
    }
}

/// Builds a `0`-cokernel `a0 = m ∘ q` with `q` an epimorphism and `m` a split
/// monomorphism. Requires `gldim mod Λ ≤ 1`, so that images of projectives
/// are projective.
pub fn construct_0_cokernel(a0: &ProjMorphism) -> Result<(ProjMorphism, ProjMorphism, ZeroCokernelTrace), TheoremError> {
    let a1 = weak_cokernel(a0);
    let (c, b) = match image_factorization(&a1) {
        Ok(pair) => pair,
        Err(CategoryError::NotProjective) => return Err(TheoremError::SplitFailure("image of a_1 is not projective")),
        Err(e) => return Err(e.into()),
    };
    let id_b = ProjMorphism::identity(c.target());
    let r = factor_through(&c, &id_b, Side::Right)?.ok_or(TheoremError::SplitFailure("c has no section"))?;
    let id_a1 = ProjMorphism::identity(a1.source());
    let idempotent = id_a1.sub(&r.compose(&c)?)?;
    let s = split_idempotent(&idempotent)?;
    let q = s.g.compose(a0)?;
    let m = s.f.clone();
    let trace = ZeroCokernelTrace {
        a0: a0.clone(),
        a1,
        b,
        c,
        r,
        idempotent,
        object: s.object,
        f: s.f,
        g: s.g,
    };
    Ok((q, m, trace))
}

/// `q` is an epimorphism, `m` has a left inverse and `m ∘ q = a0`.
pub fn verify_0_cokernel(a0: &ProjMorphism, q: &ProjMorphism, m: &ProjMorphism) -> bool {
    let factors = m.compose(q).map(|mq| mq == *a0).unwrap_or(false);
    let split = factor_through(m, &ProjMorphism::identity(m.source()), Side::Left)
        .map(|t| t.is_some())
        .unwrap_or(false);
    factors && split && is_epi_cat(q)
}
