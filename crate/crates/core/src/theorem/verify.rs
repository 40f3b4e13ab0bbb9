use crate::exactla::Matrix;
use crate::projcat::{post_composition_matrix, pre_composition_matrix, ProjMorphism, ProjObject};

/// `maps[j]: V_j → V_{j+1}`. Checks exactness at every `V_j` with `j < maps.len()`,
/// treating the map into `V_0` as zero.
fn exact_up_to_last(maps: &[Matrix]) -> bool {
    maps.iter().enumerate().all(|(j, out)| {
        let dim = out.cols();
        match j.checked_sub(1).map(|i| &maps[i]) {
            None => out.rank() == dim,
            Some(inc) => {
                let zero = out.checked_mul(inc).map(|m| m.is_zero()).unwrap_or(false);
                zero && inc.rank() + out.rank() == dim
            }
        }
    })
}

/// Exact at the single middle spot of `V_0 → V_1 → V_2`.
fn exact_in_middle(inc: &Matrix, out: &Matrix) -> bool {
    let zero = out.checked_mul(inc).map(|m| m.is_zero()).unwrap_or(false);
    zero && inc.rank() + out.rank() == out.cols()
}

fn composable(maps: &[&ProjMorphism]) -> bool {
    maps.windows(2).all(|w| w[0].target() == w[1].source())
}

/// `Hom(-, T)` applied to `X_0 → ⋯ → X_k`, listed from `Hom(X_k, T)` down.
fn contravariant(maps: &[&ProjMorphism], t: &ProjObject) -> Vec<Matrix> {
    maps.iter().rev().map(|m| pre_composition_matrix(m, t.module())).collect()
}

fn covariant(maps: &[&ProjMorphism], t: &ProjObject) -> Vec<Matrix> {
    maps.iter().map(|m| post_composition_matrix(t, m.underlying())).collect()
}

/// True iff `A_0 → A_1 → ⋯ → A_n → C` is an `n`-cokernel of `a0`: for every
/// indecomposable `T`, `0 → Hom(C,T) → Hom(A_n,T) → ⋯ → Hom(A_0,T)` is exact
/// except possibly at the last term.
pub fn verify_n_cokernel(a0: &ProjMorphism, chain: &[ProjMorphism]) -> bool {
    let maps: Vec<&ProjMorphism> = std::iter::once(a0).chain(chain).collect();
    if chain.is_empty() || !composable(&maps) {
        return false;
    }
    ProjObject::indecomposables(a0.algebra())
        .iter()
        .all(|t| exact_up_to_last(&contravariant(&maps, t)))
}

/// True iff `B_1 → ⋯ → B_n → A` is an `n`-kernel of `a`: for every
/// indecomposable `T`, `0 → Hom(T,B_1) → ⋯ → Hom(T,A) → Hom(T,A')` is exact
/// except possibly at the last term.
pub fn verify_n_kernel(a: &ProjMorphism, chain: &[ProjMorphism]) -> bool {
    let maps: Vec<&ProjMorphism> = chain.iter().chain(std::iter::once(a)).collect();
    if chain.is_empty() || !composable(&maps) {
        return false;
    }
    ProjObject::indecomposables(a.algebra())
        .iter()
        .all(|t| exact_up_to_last(&covariant(&maps, t)))
}

/// `c` is a weak cokernel of `a`: `Hom(C,T) → Hom(A_1,T) → Hom(A_0,T)` exact.
pub fn verify_weak_cokernel(a: &ProjMorphism, c: &ProjMorphism) -> bool {
    composable(&[a, c])
        && ProjObject::indecomposables(a.algebra()).iter().all(|t| {
            let m = contravariant(&[a, c], t);
            exact_in_middle(&m[0], &m[1])
        })
}

/// `k` is a weak kernel of `a`: `Hom(T,K) → Hom(T,A) → Hom(T,A')` exact.
pub fn verify_weak_kernel(a: &ProjMorphism, k: &ProjMorphism) -> bool {
    composable(&[k, a])
        && ProjObject::indecomposables(a.algebra()).iter().all(|t| {
            let m = covariant(&[k, a], t);
            exact_in_middle(&m[0], &m[1])
        })
}
