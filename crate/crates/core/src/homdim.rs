//! Minimal projective resolutions and global dimensions of `mod Λ` and
//! `mod Λ^op`.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::exactla::{Matrix, Side};
use crate::projcat::sample::{random_arrow, trial_rng};
use crate::projcat::{factor_through, image_factorization, ProjMorphism, ProjObject};
use crate::quiverrep::{kernel_mod, projective_cover, simple_of, Module, ModuleMorphism, PathAlgebra};

pub const DEFAULT_CUTOFF: usize = 8;

/// Projective dimension, or the fact that it exceeds the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjDim {
    Finite(usize),
    AboveCutoff,
}

impl ProjDim {
    pub fn max(self, other: ProjDim) -> ProjDim {
        match (self, other) {
            (ProjDim::Finite(a), ProjDim::Finite(b)) => ProjDim::Finite(a.max(b)),
            _ => ProjDim::AboveCutoff,
        }
    }
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Finite(n) => write!(f, "{n}"),
            ProjDim::AboveCutoff => write!(f, "above cutoff"),
        }
    }
}

/// A number, or the string `"above-cutoff"`.
impl Serialize for ProjDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ProjDim::Finite(n) => s.serialize_u64(*n as u64),
            ProjDim::AboveCutoff => s.serialize_str("above-cutoff"),
        }
    }
}

/// `P_k → ⋯ → P_1 → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Arc<Module>,
    /// `P_0, P_1, …`.
    pub projectives: Vec<ProjObject>,
    /// `d_k: P_k → P_{k-1}` for `k ≥ 1`, stored at index `k - 1`.
    pub differentials: Vec<ProjMorphism>,
    pub augmentation: ModuleMorphism,
    pub minimal: bool,
    /// The cutoff was reached with a nonzero kernel left over.
    pub truncated: bool,
}

impl Resolution {
    /// Number of differentials: the projective dimension when not truncated.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn pdim(&self) -> ProjDim {
        if self.truncated {
            ProjDim::AboveCutoff
        } else {
            ProjDim::Finite(self.length())
        }
    }

    /// Exactness at every `P_k` and at `M`, by per-vertex rank identities.
    pub fn is_exact(&self) -> bool {
        let alg = self.module.algebra();
        let surjective = self.augmentation.is_surjective();
        let mut maps: Vec<&ModuleMorphism> = vec![&self.augmentation];
        maps.extend(self.differentials.iter().map(ProjMorphism::underlying));
        let interior = (0..self.projectives.len()).all(|k| {
            let out = maps[k];
            let inc = maps.get(k + 1);
            (0..alg.vertex_count()).all(|v| {
                let dim = self.projectives[k].module().dim(v);
                let out_rank = out.map_at(v).rank();
                match inc {
                    Some(inc) => {
                        let zero = (out.map_at(v) * inc.map_at(v)).is_zero();
                        zero && out_rank + inc.map_at(v).rank() == dim
                    }
                    // last term: exact only if nothing is left to resolve
                    None => self.truncated || out_rank == dim,
                }
            })
        });
        surjective && interior
    }
}

fn in_radical(d: &ProjMorphism) -> bool {
    let rad = d.target().module().radical_bases();
    rad.iter().enumerate().all(|(v, r)| {
        let m = d.underlying().map_at(v);
        Matrix::hstack(d.field(), r.rows(), &[r, m]).rank() == r.rank()
    })
}

/// The projective cover of `ker φ` composed with the kernel inclusion, as a
/// morphism into `target` (the source of `φ`).
fn cover_of_kernel(phi: &ModuleMorphism, target: &ProjObject) -> ProjMorphism {
    let (k, iota) = kernel_mod(phi);
    let cover = projective_cover(&k);
    let obj = ProjObject::new(target.algebra(), cover.multiplicities.clone());
    let images: Vec<_> = cover
        .layout
        .summands
        .iter()
        .zip(&cover.generators)
        .map(|(&v, g)| {
            let col = Matrix::from_columns(phi.source().field(), g.len(), std::slice::from_ref(g));
            (iota.map_at(v) * &col).column(0)
        })
        .collect();
    ProjMorphism::from_generators(&obj, target, &images)
}

/// Iterated projective covers of successive kernels, at most `cutoff`
/// differentials deep.
pub fn minimal_resolution(m: &Arc<Module>, cutoff: usize) -> Resolution {
    let alg = m.algebra();
    let cover = projective_cover(m);
    let p0 = ProjObject::new(alg, cover.multiplicities.clone());
    let augmentation = ModuleMorphism::new(p0.module().clone(), m.clone(), cover.epsilon.maps().to_vec())
        .expect("cover module matches the free module");
    let mut projectives = vec![p0];
    let mut differentials: Vec<ProjMorphism> = Vec::new();
    let mut truncated = false;
    loop {
        let last = differentials.last().map(ProjMorphism::underlying).unwrap_or(&augmentation);
        if last.is_injective() {
            break;
        }
        if differentials.len() == cutoff {
            truncated = true;
            break;
        }
        let top = projectives.last().expect("nonempty").clone();
        let d = cover_of_kernel(last, &top);
        projectives.push(d.source().clone());
        differentials.push(d);
    }
    let minimal = differentials.iter().all(in_radical);
    Resolution {
        module: m.clone(),
        projectives,
        differentials,
        augmentation,
        minimal,
        truncated,
    }
}

pub fn pdim(m: &Arc<Module>, cutoff: usize) -> ProjDim {
    minimal_resolution(m, cutoff).pdim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub vertices: Vec<String>,
    /// Projective dimension of each simple, in vertex order.
    pub per_simple: Vec<ProjDim>,
    pub gldim: ProjDim,
    pub cutoff: usize,
}

/// `gldim mod Λ` as the maximum projective dimension of the simples.
pub fn dim_report(algebra: &Arc<PathAlgebra>, cutoff: usize) -> DimReport {
    let per_simple: Vec<ProjDim> = (0..algebra.vertex_count())
        .map(|v| pdim(&Arc::new(simple_of(algebra, v)), cutoff))
        .collect();
    let gldim = per_simple.iter().copied().fold(ProjDim::Finite(0), ProjDim::max);
    DimReport {
        vertices: algebra.quiver().vertices().to_vec(),
        per_simple,
        gldim,
        cutoff,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimComparison {
    pub algebra: DimReport,
    pub opposite: DimReport,
    pub equal: bool,
}

impl fmt::Display for DimComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: ProjDim| match d {
            ProjDim::Finite(n) => format!("= {n}"),
            ProjDim::AboveCutoff => format!("> {}", self.algebra.cutoff),
        };
        let verdict = match (self.equal, self.algebra.gldim) {
            (true, ProjDim::AboveCutoff) => format!("equal at cutoff {}", self.algebra.cutoff),
            (true, _) => "equal".to_string(),
            (false, _) => "NOT equal".to_string(),
        };
        write!(
            f,
            "gldim mod Λ {}, gldim mod Λ^op {}, {verdict}",
            show(self.algebra.gldim),
            show(self.opposite.gldim)
        )
    }
}

/// Global dimensions of `mod Λ` and `mod Λ^op`. Two `AboveCutoff` values
/// compare equal.
pub fn gldim_compare(algebra: &Arc<PathAlgebra>, cutoff: usize) -> DimComparison {
    let left = dim_report(algebra, cutoff);
    let right = dim_report(&algebra.opposite(), cutoff);
    let equal = left.gldim == right.gldim;
    DimComparison {
        algebra: left,
        opposite: right,
        equal,
    }
}

/// `f = g ∘ h` with `h` a split epimorphism and `g` a split monomorphism.
#[derive(Clone, Debug)]
pub struct SplitFactorization {
    pub g: ProjMorphism,
    pub h: ProjMorphism,
    /// `h ∘ section = 1`.
    pub section: ProjMorphism,
    /// `retraction ∘ g = 1`.
    pub retraction: ProjMorphism,
}

/// Factors through the image and checks both splittings. `None` when the
/// image is not projective or either map fails to split.
pub fn split_factorization(f: &ProjMorphism) -> Option<SplitFactorization> {
    let (h, g) = image_factorization(f).ok()?;
    let section = factor_through(&h, &ProjMorphism::identity(h.target()), Side::Right).ok()??;
    let retraction = factor_through(&g, &ProjMorphism::identity(g.source()), Side::Left).ok()??;
    let ok = g.compose(&h).ok()? == *f
        && h.compose(&section).ok()?.is_identity()
        && retraction.compose(&g).ok()?.is_identity();
    ok.then_some(SplitFactorization { g, h, section, retraction })
}

/// Runs [`split_factorization`] on `samples` seeded random morphisms.
pub fn split_factorization_check(algebra: &Arc<PathAlgebra>, samples: usize, seed: u64) -> bool {
    (0..samples as u64).all(|t| split_factorization(&random_arrow(algebra, &mut trial_rng(seed, t))).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;
    use crate::quiverrep::projective_of;
    use crate::zoo;

    const Q: Field = Field::Rational;

    #[test]
    fn projective_has_length_zero() {
        let alg = zoo::a3r(Q);
        for v in 0..3 {
            let r = minimal_resolution(&Arc::new(projective_of(&alg, v)), 8);
            assert_eq!(r.pdim(), ProjDim::Finite(0));
            assert!(r.is_exact() && r.minimal);
        }
    }

    #[test]
    fn a2_simple_resolution() {
        let alg = zoo::a2(Q);
        let r = minimal_resolution(&Arc::new(simple_of(&alg, 0)), 8);
        assert_eq!(r.length(), 1);
        assert_eq!(r.projectives[0].multiplicities(), &[1, 0]);
        assert_eq!(r.projectives[1].multiplicities(), &[0, 1]);
        assert!(r.is_exact() && r.minimal && !r.truncated);
    }

    #[test]
    fn a3r_simple_has_pdim_two() {
        let alg = zoo::a3r(Q);
        let r = minimal_resolution(&Arc::new(simple_of(&alg, 0)), 8);
        let mults: Vec<_> = r.projectives.iter().map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(mults, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(r.pdim(), ProjDim::Finite(2));
        assert!(r.is_exact() && r.minimal);
    }

    #[test]
    fn loop_resolution_is_periodic() {
        let alg = zoo::loop2(Q);
        let r = minimal_resolution(&Arc::new(simple_of(&alg, 0)), 8);
        assert!(r.truncated);
        assert_eq!(r.pdim(), ProjDim::AboveCutoff);
        assert_eq!(r.length(), 8);
        assert!(r.projectives.iter().all(|p| p.multiplicities() == [1]));
        assert!(r.is_exact() && r.minimal);
        assert_eq!(pdim(&Arc::new(simple_of(&alg, 0)), 0), ProjDim::AboveCutoff);
    }

    #[test]
    fn zoo_dimensions() {
        let expected = [
            ProjDim::Finite(0),
            ProjDim::Finite(1),
            ProjDim::Finite(2),
            ProjDim::AboveCutoff,
        ];
        for ((name, alg), want) in zoo::all(Q).into_iter().zip(expected) {
            let cmp = gldim_compare(&alg, DEFAULT_CUTOFF);
            assert_eq!(cmp.algebra.gldim, want, "{name}");
            assert_eq!(cmp.opposite.gldim, want, "{name}");
            assert!(cmp.equal);
        }
    }

    #[test]
    fn comparison_text() {
        let cmp = gldim_compare(&zoo::a3r(Q), 8);
        assert_eq!(cmp.to_string(), "gldim mod Λ = 2, gldim mod Λ^op = 2, equal");
        let cmp = gldim_compare(&zoo::loop2(Q), 8);
        assert_eq!(cmp.to_string(), "gldim mod Λ > 8, gldim mod Λ^op > 8, equal at cutoff 8");
    }

    #[test]
    fn projdim_serializes_as_number_or_marker() {
        let report = dim_report(&zoo::loop2(Q), 3);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, r#"{"vertices":["1"],"per_simple":["above-cutoff"],"gldim":"above-cutoff","cutoff":3}"#);
    }

    #[test]
    fn split_factorizations() {
        let alg = zoo::semi2(Q);
        let p = ProjObject::new(&alg, vec![2, 1]);
        let s = split_factorization(&ProjMorphism::identity(&p)).unwrap();
        assert!(s.g.is_identity() && s.h.is_identity());
        let z = split_factorization(&ProjMorphism::zero(&p, &p)).unwrap();
        assert!(z.h.target().is_zero());
        assert!(split_factorization_check(&alg, 50, 0));

        // a2: the inclusion P(2) → P(1) is a monomorphism without retraction
        let alg = zoo::a2(Q);
        let x = ProjObject::indecomposable(&alg, 1);
        let y = ProjObject::indecomposable(&alg, 0);
        let m = crate::quiverrep::hom_basis(x.module(), y.module()).unwrap().remove(0);
        assert!(split_factorization(&ProjMorphism::new(x, y, m).unwrap()).is_none());
    }
}
