use crate::exactla::{Matrix, Side};
use crate::quiverrep::{image_mod, kernel_mod, projective_cover, same_algebra, ModuleMorphism};

use super::object::{post_composition_matrix, pre_composition_matrix};
use super::{CategoryError, ProjMorphism, ProjObject};

/// The duality `(-)^* = Hom_Λ(-, Λ): proj Λ → proj Λ^op`.
///
/// On objects `P(v) ↦ P^op(v)`; on morphisms the path matrix is transposed and
/// every path reversed. Applying it twice returns the input exactly.
pub fn star_dual(phi: &ProjMorphism) -> ProjMorphism {
    let alg = phi.algebra();
    let op = alg.opposite();
    let f = alg.field();
    let src = ProjObject::new(&op, phi.target().multiplicities().to_vec());
    let tgt = ProjObject::new(&op, phi.source().multiplicities().to_vec());
    let images: Vec<_> = src
        .summands()
        .iter()
        .enumerate()
        .map(|(j, &w)| {
            let mut y = vec![f.zero(); tgt.module().dim(w)];
            for (i, &v) in tgt.summands().iter().enumerate() {
                let off = tgt.layout().offsets[i][w];
                let op_paths = op.paths_between(v, w);
                for (b, c) in phi.entry(j, i) {
                    let rev = alg.basis()[b].reversed();
                    let ob = op.basis_index(&rev).expect("opposite basis is the reversed basis");
                    let k = op_paths.iter().position(|&x| x == ob).expect("path has the right endpoints");
                    y[off + k] = c;
                }
            }
            y
        })
        .collect();
    ProjMorphism::from_generators(&src, &tgt, &images)
}

/// Minimal weak kernel: the projective cover of the module kernel, composed
/// with the kernel inclusion.
pub fn weak_kernel(phi: &ProjMorphism) -> ProjMorphism {
    let (k, iota) = kernel_mod(phi.underlying());
    let cover = projective_cover(&k);
    let obj = ProjObject::new(phi.algebra(), cover.multiplicities.clone());
    let images = cover_images(&cover.layout.summands, &cover.generators, &iota);
    ProjMorphism::from_generators(&obj, phi.source(), &images)
}

/// Minimal weak cokernel, obtained as `(weak_kernel(φ^*))^*`.
pub fn weak_cokernel(phi: &ProjMorphism) -> ProjMorphism {
    star_dual(&weak_kernel(&star_dual(phi)))
}

fn cover_images(summands: &[usize], generators: &[Vec<crate::exactla::Scalar>], into: &ModuleMorphism) -> Vec<Vec<crate::exactla::Scalar>> {
    let f = into.source().field();
    summands
        .iter()
        .zip(generators)
        .map(|(&v, g)| {
            let col = Matrix::from_columns(f, g.len(), std::slice::from_ref(g));
            (into.map_at(v) * &col).column(0)
        })
        .collect()
}

/// A splitting `e = f ∘ g`, `g ∘ f = 1_C` of an idempotent.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub object: ProjObject,
    pub f: ProjMorphism,
    pub g: ProjMorphism,
    /// The isomorphism from `object` onto the image module of `e`.
    pub iso: ModuleMorphism,
}

/// Splits an idempotent endomorphism through its image. The image is a direct
/// summand of a projective, so its projective cover is an isomorphism; that
/// cover names the object `C`.
pub fn split_idempotent(e: &ProjMorphism) -> Result<Splitting, CategoryError> {
    if !e.is_endomorphism() {
        return Err(CategoryError::NotEndomorphism);
    }
    if e.compose(e)? != *e {
        return Err(CategoryError::NotIdempotent);
    }
    let dom = e.source();
    let (im, incl) = image_mod(e.underlying());
    let cover = projective_cover(&im);
    if !(cover.epsilon.is_injective() && cover.epsilon.is_surjective()) {
        return Err(CategoryError::NotProjective);
    }
    let object = ProjObject::new(e.algebra(), cover.multiplicities.clone());
    let f_images = cover_images(&cover.layout.summands, &cover.generators, &incl);
    let f = ProjMorphism::from_generators(&object, dom, &f_images);

    let field = e.field();
    let g_images: Vec<_> = dom
        .summands()
        .iter()
        .zip(e.generator_images())
        .map(|(&v, y)| {
            let y = Matrix::from_columns(field, y.len(), &[y]);
            let in_image = incl
                .map_at(v)
                .solve_factor(&y, Side::Right)?
                .ok_or(CategoryError::NotIdempotent)?;
            let pre = cover
                .epsilon
                .map_at(v)
                .solve_factor(&in_image, Side::Right)?
                .ok_or(CategoryError::NotProjective)?;
            Ok(pre.column(0))
        })
        .collect::<Result<_, CategoryError>>()?;
    let g = ProjMorphism::from_generators(dom, &object, &g_images);

    if f.compose(&g)? != *e || !g.compose(&f)?.is_identity() {
        return Err(CategoryError::Internal("idempotent splitting identities fail"));
    }
    Ok(Splitting {
        object,
        f,
        g,
        iso: cover.epsilon,
    })
}

/// Factors `φ = b ∘ c` through the module image of `φ`, with `b` the inclusion
/// of the image. Fails with `NotProjective` when the image is not projective.
pub fn image_factorization(phi: &ProjMorphism) -> Result<(ProjMorphism, ProjMorphism), CategoryError> {
    let (im, incl) = image_mod(phi.underlying());
    let cover = projective_cover(&im);
    if !(cover.epsilon.is_injective() && cover.epsilon.is_surjective()) {
        return Err(CategoryError::NotProjective);
    }
    let object = ProjObject::new(phi.algebra(), cover.multiplicities.clone());
    let b_images = cover_images(&cover.layout.summands, &cover.generators, &incl);
    let b = ProjMorphism::from_generators(&object, phi.target(), &b_images);
    let c = factor_through(&b, phi, Side::Right)?.ok_or(CategoryError::Internal("map does not factor through its image"))?;
    Ok((c, b))
}

/// Categorical monomorphism test: `Hom(P(v), φ)` injective for every vertex `v`.
pub fn is_mono_cat(phi: &ProjMorphism) -> bool {
    ProjObject::indecomposables(phi.algebra()).iter().all(|t| {
        let m = post_composition_matrix(t, phi.underlying());
        m.rank() == m.cols()
    })
}

/// Categorical epimorphism test: `Hom(φ, P(v))` injective for every vertex `v`.
pub fn is_epi_cat(phi: &ProjMorphism) -> bool {
    ProjObject::indecomposables(phi.algebra()).iter().all(|t| {
        let m = pre_composition_matrix(phi, t.module());
        m.rank() == m.cols()
    })
}

/// Solves `pivot ∘ t = candidate` (right) or `t ∘ pivot = candidate` (left) in
/// Hom coordinates. `Ok(None)` when no such `t` exists.
pub fn factor_through(pivot: &ProjMorphism, candidate: &ProjMorphism, side: Side) -> Result<Option<ProjMorphism>, CategoryError> {
    if !same_algebra(pivot.algebra(), candidate.algebra()) {
        return Err(CategoryError::AlgebraMismatch);
    }
    let field = pivot.field();
    let coords = candidate.hom_coords();
    let b = Matrix::from_columns(field, coords.len(), &[coords]);
    match side {
        Side::Right => {
            if pivot.target() != candidate.target() {
                return Err(CategoryError::NotComposable);
            }
            let a = post_composition_matrix(candidate.source(), pivot.underlying());
            Ok(a.solve_factor(&b, Side::Right)?
                .map(|x| ProjMorphism::from_hom_coords(candidate.source(), pivot.source(), &x.column(0))))
        }
        Side::Left => {
            if pivot.source() != candidate.source() {
                return Err(CategoryError::NotComposable);
            }
            let a = pre_composition_matrix(pivot, candidate.target().module());
            Ok(a.solve_factor(&b, Side::Right)?
                .map(|x| ProjMorphism::from_hom_coords(pivot.target(), candidate.target(), &x.column(0))))
        }
    }
}
