//! Seeded random objects and morphisms of `proj Λ`.
//!
//! Generator: ChaCha8 seeded with `seed`, stream set to the trial index, so each
//! trial draws from its own reproducible sequence regardless of scheduling.
//! Objects have multiplicities uniform in `0..=2`; morphisms are integer
//! combinations of `hom_basis` with coefficients uniform in `-3..=3`.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::quiverrep::{hom_basis, ModuleMorphism, PathAlgebra};

use super::{ProjMorphism, ProjObject};

pub const MAX_MULTIPLICITY: usize = 2;
pub const COEFFICIENT_RANGE: i64 = 3;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_object(algebra: &Arc<PathAlgebra>, rng: &mut impl Rng) -> ProjObject {
    let mults = (0..algebra.vertex_count())
        .map(|_| rng.gen_range(0..=MAX_MULTIPLICITY))
        .collect();
    ProjObject::new(algebra, mults)
}

pub fn random_morphism(source: &ProjObject, target: &ProjObject, rng: &mut impl Rng) -> ProjMorphism {
    let basis = hom_basis(source.module(), target.module()).expect("objects over one algebra");
    let f = source.field();
    let mut acc = ModuleMorphism::zero(source.module(), target.module());
    for b in &basis {
        let c = rng.gen_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE);
        if c != 0 {
            acc = acc.add(&b.scale(&f.from_i64(c))).expect("same shape");
        }
    }
    ProjMorphism::new(source.clone(), target.clone(), acc).expect("built on the realized modules")
}

/// A random object with a random morphism out of it.
pub fn random_arrow(algebra: &Arc<PathAlgebra>, rng: &mut impl Rng) -> ProjMorphism {
    let x = random_object(algebra, rng);
    let y = random_object(algebra, rng);
    random_morphism(&x, &y, rng)
}

/// An idempotent `s ∘ p` on `Y ⊕ Z`, where `s = (1, u)` and `p = (1 - v u, v)`
/// for random `u: Y → Z`, `v: Z → Y`; then `p ∘ s = 1_Y`.
pub fn random_idempotent(algebra: &Arc<PathAlgebra>, rng: &mut impl Rng) -> ProjMorphism {
    let y = random_object(algebra, rng);
    let z = random_object(algebra, rng);
    let u = random_morphism(&y, &z, rng);
    let v = random_morphism(&z, &y, rng);
    let sum = y.direct_sum(&z).expect("same algebra");
    let [iy, iz] = &sum.inclusions;
    let [py, pz] = &sum.projections;
    let s = iy.add(&iz.compose(&u).unwrap()).unwrap();
    let one_minus_vu = ProjMorphism::identity(&y).sub(&v.compose(&u).unwrap()).unwrap();
    let p = one_minus_vu.compose(py).unwrap().add(&v.compose(pz).unwrap()).unwrap();
    debug_assert!(p.compose(&s).unwrap().is_identity());
    s.compose(&p).unwrap()
}
