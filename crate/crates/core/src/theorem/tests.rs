use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::exactla::{Field, Matrix};
use crate::projcat::sample::{random_arrow, trial_rng};
use crate::projcat::{is_epi_cat, is_mono_cat, star_dual, weak_cokernel, ProjMorphism, ProjObject};
use crate::quiverrep::{hom_basis, PathAlgebra};
use crate::zoo;

const Q: Field = Field::Rational;

fn spanning(alg: &Arc<PathAlgebra>, v: usize, w: usize) -> ProjMorphism {
    let x = ProjObject::indecomposable(alg, v);
    let y = ProjObject::indecomposable(alg, w);
    let mut basis = hom_basis(x.module(), y.module()).unwrap();
    assert_eq!(basis.len(), 1);
    ProjMorphism::new(x, y, basis.remove(0)).unwrap()
}

fn mat(rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_i64(Q, rows, cols, entries)
}

#[test]
fn weak_cokernel_chain_examples() {
    let alg = zoo::a3r(Q);
    let p = ProjObject::new(&alg, vec![1, 0, 1]);
    let chain = iterate_weak_cokernels(&ProjMorphism::identity(&p), 3);
    assert!(chain.morphisms().iter().all(|m| m.target().is_zero()));

    let q = ProjObject::new(&alg, vec![0, 1, 1]);
    let chain = iterate_weak_cokernels(&ProjMorphism::zero(&p, &q), 2);
    assert!(chain.morphisms()[0].is_identity());
    assert!(chain.morphisms()[1].target().is_zero());

    let chain = iterate_weak_cokernels(&spanning(&alg, 2, 1), 2);
    let [a1, a2] = chain.morphisms() else { panic!("two maps") };
    assert_eq!((a1.source().multiplicities(), a1.target().multiplicities()), (&[0, 1, 0][..], &[1, 0, 0][..]));
    assert_eq!(a2.source().multiplicities(), &[1, 0, 0]);
    assert!(a2.target().is_zero());
    assert!(chain.is_complex());
}

#[test]
fn n_kernel_examples() {
    let alg = zoo::a3r(Q);
    let p = ProjObject::new(&alg, vec![1, 1, 0]);
    let q = ProjObject::new(&alg, vec![0, 0, 2]);
    let zero = ProjMorphism::zero(&p, &q);
    let b = compute_n_kernel(&zero, 1).unwrap();
    assert!(b.morphisms()[0].is_identity());
    assert!(verify_n_kernel(&zero, b.morphisms()));

    let p1 = ProjObject::indecomposable(&alg, 0);
    let to_zero = ProjMorphism::zero(&p1, &ProjObject::zero(&alg));
    assert!(compute_n_kernel(&to_zero, 1).unwrap().morphisms()[0].is_identity());

    let a1 = spanning(&alg, 1, 0);
    let b = compute_n_kernel(&a1, 1).unwrap();
    let b1 = &b.morphisms()[0];
    assert_eq!(b1.source().multiplicities(), &[0, 0, 1]);
    assert_eq!(b1.target().multiplicities(), &[0, 1, 0]);
    assert!(is_mono_cat(b1));
    assert!(verify_n_kernel(&a1, b.morphisms()));

    assert!(matches!(compute_n_kernel(&a1, 0), Err(TheoremError::InvalidN { .. })));
}

#[test]
fn loop_algebra_has_no_minimal_n_kernels() {
    let alg = zoo::loop2(Q);
    let p = ProjObject::indecomposable(&alg, 0);
    let x = hom_basis(p.module(), p.module())
        .unwrap()
        .into_iter()
        .map(|m| ProjMorphism::new(p.clone(), p.clone(), m).unwrap())
        .find(|m| !m.underlying().is_injective())
        .unwrap();
    for n in 1..4 {
        assert!(matches!(compute_n_kernel(&x, n), Err(TheoremError::MonoFailure { .. })));
        assert!(matches!(construct_n_cokernel(&x, n), Err(TheoremError::MonoFailure { .. })));
    }
}

#[test]
fn verify_n_cokernel_examples() {
    let alg = zoo::a3r(Q);
    let p = ProjObject::new(&alg, vec![1, 1, 0]);
    let id = ProjMorphism::identity(&p);
    let to_zero = ProjMorphism::zero(&p, &ProjObject::zero(&alg));
    assert!(verify_n_cokernel(&id, &[to_zero]));

    let a0 = spanning(&alg, 2, 1);
    let a1 = spanning(&alg, 1, 0);
    assert!(verify_n_cokernel(&a0, std::slice::from_ref(&a1)));
    assert!(verify_weak_cokernel(&a0, &a1));
    let zero = ProjMorphism::zero(a1.source(), a1.target());
    assert!(!verify_n_cokernel(&a0, std::slice::from_ref(&zero)));
    assert!(!verify_weak_cokernel(&a0, &zero));
    assert!(verify_weak_kernel(&a1, &a0));
    assert!(!verify_n_cokernel(&a0, &[]));
}

#[test]
fn construct_from_identity_gives_zero_objects() {
    let alg = zoo::a3r(Q);
    let p = ProjObject::new(&alg, vec![1, 2, 1]);
    for n in 1..3 {
        let (chain, trace) = construct_n_cokernel(&ProjMorphism::identity(&p), n).unwrap();
        assert!(chain.morphisms().iter().all(|m| m.target().is_zero()));
        assert!(trace.all_identities_hold());
        assert!(verify_n_cokernel(&trace.a0, chain.morphisms()));
    }
}

#[test]
fn a3r_inclusion_takes_the_fast_path() {
    let alg = zoo::a3r(Q);
    let a0 = spanning(&alg, 2, 1);
    let (chain, trace) = construct_n_cokernel(&a0, 1).unwrap();
    assert!(trace.fast_path);
    assert_eq!(trace.c[0], trace.a[0]);
    assert!(trace.d[0].is_identity());
    assert!(trace.b[0].is_identity());
    assert_eq!(chain.len(), 1);
    assert_eq!(chain.morphisms()[0], weak_cokernel(&a0));
    assert_eq!(chain.terminal().unwrap().multiplicities(), &[1, 0, 0]);
    assert!(verify_n_cokernel(&a0, chain.morphisms()));
    assert!(trace.all_identities_hold());

    let (general, gtrace) = construct_n_cokernel_with(&a0, 1, SplitStrategy::General).unwrap();
    assert!(!gtrace.fast_path);
    assert_eq!(general, chain);

    let report = trace.to_string();
    assert!(report.contains("fast path: yes"));
    assert!(!report.contains("FAILED"));
}

#[test]
fn construct_rejects_n_zero() {
    let alg = zoo::a2(Q);
    let a0 = spanning(&alg, 1, 0);
    assert!(matches!(construct_n_cokernel(&a0, 0), Err(TheoremError::InvalidN { .. })));
}

#[test]
fn semisimple_zero_cokernel_worked_example() {
    let alg = zoo::semi2(Q);
    let p1 = ProjObject::indecomposable(&alg, 0);
    let p11 = ProjObject::new(&alg, vec![2, 0]);
    let a0 = ProjMorphism::from_generators(&p1, &p11, &[vec![Q.from_i64(1), Q.from_i64(1)]]);
    let (q, m, t) = construct_0_cokernel(&a0).unwrap();
    assert_eq!(*t.a1.underlying().map_at(0), mat(1, 2, &[1, -1]));
    assert_eq!(*t.c.underlying().map_at(0), mat(1, 2, &[1, -1]));
    assert_eq!(*t.r.underlying().map_at(0), mat(2, 1, &[1, 0]));
    assert_eq!(*t.idempotent.underlying().map_at(0), mat(2, 2, &[0, 1, 0, 1]));
    assert_eq!(t.object, p1);
    assert_eq!(*t.f.underlying().map_at(0), mat(2, 1, &[1, 1]));
    assert_eq!(*t.g.underlying().map_at(0), mat(1, 2, &[0, 1]));
    assert_eq!(*q.underlying().map_at(0), mat(1, 1, &[1]));
    assert_eq!(m, t.f);
    assert_eq!(m.compose(&q).unwrap(), a0);
    assert!(verify_0_cokernel(&a0, &q, &m));
}

#[test]
fn zero_cokernel_of_identity_and_zero() {
    let alg = zoo::a2(Q);
    let p = ProjObject::new(&alg, vec![1, 1]);
    let (q, m, _) = construct_0_cokernel(&ProjMorphism::identity(&p)).unwrap();
    assert!(q.is_identity() && m.is_identity());

    let x = ProjObject::new(&alg, vec![0, 2]);
    let zero = ProjMorphism::zero(&x, &p);
    let (q, m, _) = construct_0_cokernel(&zero).unwrap();
    assert!(q.target().is_zero());
    assert!(verify_0_cokernel(&zero, &q, &m));
}

#[test]
fn zero_cokernel_needs_hereditary_algebra() {
    let alg = zoo::a3r(Q);
    // a_1: P(2) → P(1) has image S(2), which is not projective
    let a0 = spanning(&alg, 2, 1);
    assert!(matches!(construct_0_cokernel(&a0), Err(TheoremError::SplitFailure(_))));
}

#[test]
fn morphism_chain_checks_composability() {
    let alg = zoo::a3r(Q);
    let a = spanning(&alg, 2, 1);
    assert!(matches!(MorphismChain::new(vec![a.clone(), a.clone()]), Err(TheoremError::NotComposable)));
    let b = spanning(&alg, 1, 0);
    let chain = MorphismChain::new(vec![a.clone(), b.clone()]).unwrap();
    assert!(chain.is_complex());
    let dual = chain.dual();
    assert_eq!(dual.morphisms()[0], star_dual(&b));
    assert_eq!(dual.dual(), chain);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn a3r_constructions_verify(seed in any::<u64>(), n in 1usize..3) {
        let alg = zoo::a3r(Q);
        let a0 = random_arrow(&alg, &mut trial_rng(seed, 0));
        let (chain, trace) = construct_n_cokernel(&a0, n).unwrap();
        prop_assert!(trace.all_identities_hold());
        prop_assert!(verify_n_cokernel(&a0, chain.morphisms()));
        prop_assert!(is_epi_cat(chain.last().unwrap()));
        prop_assert!(verify_n_kernel(&trace.a[n], &trace.b));

        let dual = n_cokernel_by_duality(&a0, n).unwrap();
        prop_assert_eq!(dual.terminal().unwrap().multiplicities(), chain.terminal().unwrap().multiplicities());

        let (kchain, _) = n_kernel_by_duality(&a0, n).unwrap();
        prop_assert!(verify_n_kernel(&a0, kchain.morphisms()));
        prop_assert!(is_mono_cat(kchain.first().unwrap()));
    }

    #[test]
    fn general_path_agrees_with_fast_path(seed in any::<u64>()) {
        let alg = zoo::a3r(Q);
        let a0 = random_arrow(&alg, &mut trial_rng(seed, 1));
        let (fast, _) = construct_n_cokernel_with(&a0, 1, SplitStrategy::Auto).unwrap();
        let (general, trace) = construct_n_cokernel_with(&a0, 1, SplitStrategy::General).unwrap();
        prop_assert_eq!(fast, general);
        prop_assert!(trace.all_identities_hold());
    }

    #[test]
    fn hereditary_zero_cokernels(which in 0usize..2, seed in any::<u64>()) {
        let alg = [zoo::semi2(Q), zoo::a2(Q)][which].clone();
        let a0 = random_arrow(&alg, &mut trial_rng(seed, 2));
        let (q, m, _) = construct_0_cokernel(&a0).unwrap();
        prop_assert!(verify_0_cokernel(&a0, &q, &m));
    }
}
