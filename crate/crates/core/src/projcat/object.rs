use std::fmt;
use std::sync::Arc;

use crate::exactla::{Field, Matrix, Scalar};
use crate::quiverrep::{free_module, morphism_from_generators, same_algebra, Module, ModuleMorphism, PathAlgebra, ProjLayout};

use super::CategoryError;

/// An object of `proj Λ`: `⊕_v P(v)^{m_v}`, summands ordered by vertex.
#[derive(Clone, Debug)]
pub struct ProjObject {
    algebra: Arc<PathAlgebra>,
    multiplicities: Vec<usize>,
    layout: ProjLayout,
    module: Arc<Module>,
}

impl PartialEq for ProjObject {
    fn eq(&self, other: &Self) -> bool {
        self.multiplicities == other.multiplicities && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for ProjObject {}

impl ProjObject {
    pub fn new(algebra: &Arc<PathAlgebra>, multiplicities: Vec<usize>) -> ProjObject {
        assert_eq!(multiplicities.len(), algebra.vertex_count(), "one multiplicity per vertex");
        let summands: Vec<usize> = multiplicities
            .iter()
            .enumerate()
            .flat_map(|(v, &m)| std::iter::repeat_n(v, m))
            .collect();
        let (module, layout) = free_module(algebra, &summands);
        ProjObject {
            algebra: algebra.clone(),
            multiplicities,
            layout,
            module: Arc::new(module),
        }
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> ProjObject {
        ProjObject::new(algebra, vec![0; algebra.vertex_count()])
    }

    pub fn indecomposable(algebra: &Arc<PathAlgebra>, v: usize) -> ProjObject {
        let mut m = vec![0; algebra.vertex_count()];
        m[v] = 1;
        ProjObject::new(algebra, m)
    }

    /// All indecomposable projectives `P(v)`, in vertex order.
    pub fn indecomposables(algebra: &Arc<PathAlgebra>) -> Vec<ProjObject> {
        (0..algebra.vertex_count()).map(|v| ProjObject::indecomposable(algebra, v)).collect()
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Vertex of each summand, in summand order.
    pub fn summands(&self) -> &[usize] {
        &self.layout.summands
    }

    pub fn layout(&self) -> &ProjLayout {
        &self.layout
    }

    pub fn module(&self) -> &Arc<Module> {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 0)
    }

    /// Coordinate of the generator of summand `i` inside `module().dim(v_i)`.
    pub fn generator_coordinate(&self, i: usize) -> usize {
        self.layout.generator_coordinate(&self.algebra, i)
    }

    /// `dim Hom(self, m) = Σ_i dim m_{v_i}` (Yoneda).
    pub fn hom_dim(&self, m: &Module) -> usize {
        self.summands().iter().map(|&v| m.dim(v)).sum()
    }

    /// `self ⊕ other` with its structure maps.
    pub fn direct_sum(&self, other: &ProjObject) -> Result<DirectSum, CategoryError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(CategoryError::AlgebraMismatch);
        }
        let mults: Vec<usize> = self
            .multiplicities
            .iter()
            .zip(&other.multiplicities)
            .map(|(a, b)| a + b)
            .collect();
        let sum = ProjObject::new(&self.algebra, mults);
        // summand index in `sum` of each summand of the left / right part
        let mut left_pos = Vec::new();
        let mut right_pos = Vec::new();
        let mut next = 0;
        for v in 0..self.algebra.vertex_count() {
            for _ in 0..self.multiplicities[v] {
                left_pos.push(next);
                next += 1;
            }
            for _ in 0..other.multiplicities[v] {
                right_pos.push(next);
                next += 1;
            }
        }
        let f = self.field();
        let unit = |obj: &ProjObject, i: usize| -> Vec<Scalar> {
            let v = obj.summands()[i];
            let c = obj.generator_coordinate(i);
            (0..obj.module.dim(v)).map(|r| if r == c { f.one() } else { f.zero() }).collect()
        };
        let zero_at = |obj: &ProjObject, v: usize| vec![f.zero(); obj.module.dim(v)];

        let incl = |part: &ProjObject, pos: &[usize]| {
            let images = pos.iter().map(|&s| unit(&sum, s)).collect::<Vec<_>>();
            ProjMorphism::from_generators(part, &sum, &images)
        };
        let proj = |part: &ProjObject, pos: &[usize]| {
            let images = (0..sum.summands().len())
                .map(|s| match pos.iter().position(|&p| p == s) {
                    Some(i) => unit(part, i),
                    None => zero_at(part, sum.summands()[s]),
                })
                .collect::<Vec<_>>();
            ProjMorphism::from_generators(&sum, part, &images)
        };
        Ok(DirectSum {
            inclusions: [incl(self, &left_pos), incl(other, &right_pos)],
            projections: [proj(self, &left_pos), proj(other, &right_pos)],
            object: sum,
        })
    }
}

impl fmt::Display for ProjObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let labels = self.algebra.quiver().vertices();
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, &m)| {
                if m == 1 {
                    format!("P({})", labels[v])
                } else {
                    format!("P({})^{}", labels[v], m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A biproduct `object = A ⊕ B` with inclusions and projections for both parts.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub object: ProjObject,
    pub inclusions: [ProjMorphism; 2],
    pub projections: [ProjMorphism; 2],
}

/// A morphism of `proj Λ`, stored as the underlying module morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMorphism {
    source: ProjObject,
    target: ProjObject,
    underlying: ModuleMorphism,
}

impl ProjMorphism {
    pub fn new(source: ProjObject, target: ProjObject, underlying: ModuleMorphism) -> Result<ProjMorphism, CategoryError> {
        if **underlying.source() != *source.module || **underlying.target() != *target.module {
            return Err(CategoryError::NotComposable);
        }
        Ok(ProjMorphism {
            source,
            target,
            underlying,
        })
    }

    /// Generator `i` of `source` goes to `images[i]`, a vector in `target` at vertex `v_i`.
    pub fn from_generators(source: &ProjObject, target: &ProjObject, images: &[Vec<Scalar>]) -> ProjMorphism {
        assert_eq!(images.len(), source.summands().len(), "one image per summand");
        let underlying = morphism_from_generators(&source.module, &source.layout, &target.module, images);
        ProjMorphism {
            source: source.clone(),
            target: target.clone(),
            underlying,
        }
    }

    /// Inverse of [`ProjMorphism::hom_coords`].
    pub fn from_hom_coords(source: &ProjObject, target: &ProjObject, coords: &[Scalar]) -> ProjMorphism {
        let mut images = Vec::with_capacity(source.summands().len());
        let mut at = 0;
        for &v in source.summands() {
            let d = target.module.dim(v);
            images.push(coords[at..at + d].to_vec());
            at += d;
        }
        assert_eq!(at, coords.len(), "coordinate count matches dim Hom");
        ProjMorphism::from_generators(source, target, &images)
    }

    pub fn identity(obj: &ProjObject) -> ProjMorphism {
        ProjMorphism {
            source: obj.clone(),
            target: obj.clone(),
            underlying: ModuleMorphism::identity(&obj.module),
        }
    }

    pub fn zero(source: &ProjObject, target: &ProjObject) -> ProjMorphism {
        ProjMorphism {
            source: source.clone(),
            target: target.clone(),
            underlying: ModuleMorphism::zero(&source.module, &target.module),
        }
    }

    pub fn source(&self) -> &ProjObject {
        &self.source
    }

    pub fn target(&self) -> &ProjObject {
        &self.target
    }

    pub fn underlying(&self) -> &ModuleMorphism {
        &self.underlying
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.source.algebra
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// Image of each source generator, as a vector of the target at that generator's vertex.
    pub fn generator_images(&self) -> Vec<Vec<Scalar>> {
        self.source
            .summands()
            .iter()
            .enumerate()
            .map(|(i, &v)| self.underlying.map_at(v).column(self.source.generator_coordinate(i)))
            .collect()
    }

    /// Coordinates in `Hom(source, target) ≅ ⊕_i target_{v_i}`.
    pub fn hom_coords(&self) -> Vec<Scalar> {
        self.generator_images().into_iter().flatten().collect()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &ProjMorphism) -> Result<ProjMorphism, CategoryError> {
        if rhs.target != self.source {
            return Err(CategoryError::NotComposable);
        }
        Ok(ProjMorphism {
            source: rhs.source.clone(),
            target: self.target.clone(),
            underlying: self.underlying.compose(&rhs.underlying)?,
        })
    }

    pub fn add(&self, rhs: &ProjMorphism) -> Result<ProjMorphism, CategoryError> {
        self.same_shape(rhs)?;
        Ok(ProjMorphism {
            underlying: self.underlying.add(&rhs.underlying)?,
            ..self.clone()
        })
    }

    pub fn sub(&self, rhs: &ProjMorphism) -> Result<ProjMorphism, CategoryError> {
        self.same_shape(rhs)?;
        Ok(ProjMorphism {
            underlying: self.underlying.sub(&rhs.underlying)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> ProjMorphism {
        ProjMorphism {
            underlying: self.underlying.scale(s),
            ..self.clone()
        }
    }

    fn same_shape(&self, rhs: &ProjMorphism) -> Result<(), CategoryError> {
        if self.source != rhs.source || self.target != rhs.target {
            return Err(CategoryError::NotComposable);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.underlying.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.underlying.is_identity()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// Entry `(j, i)`: the component `P(v_i) → P(w_j)` as a combination of
    /// basis paths from `w_j` to `v_i`.
    pub fn entry(&self, j: usize, i: usize) -> Vec<(usize, Scalar)> {
        let v = self.source.summands()[i];
        let w = self.target.summands()[j];
        let img = self.underlying.map_at(v).column(self.source.generator_coordinate(i));
        let off = self.target.layout.offsets[j][v];
        self.algebra()
            .paths_between(w, v)
            .iter()
            .enumerate()
            .filter_map(|(k, &b)| {
                let c = &img[off + k];
                (!c.is_zero()).then(|| (b, c.clone()))
            })
            .collect()
    }
}

impl fmt::Display for ProjMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = self.algebra();
        write!(f, "{} -> {} [", self.source, self.target)?;
        for j in 0..self.target.summands().len() {
            if j > 0 {
                write!(f, "; ")?;
            }
            for i in 0..self.source.summands().len() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                let terms = self.entry(j, i);
                if terms.is_empty() {
                    write!(f, "0")?;
                    continue;
                }
                for (k, (b, c)) in terms.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    let label = alg.path_label(&alg.basis()[*b]);
                    if c.is_one() {
                        write!(f, "{label}")?;
                    } else {
                        write!(f, "{c}*{label}")?;
                    }
                }
            }
        }
        write!(f, "]")
    }
}

/// Matrix of `ψ ∘ -: Hom(x, M) → Hom(x, N)` in Yoneda coordinates.
pub fn post_composition_matrix(x: &ProjObject, psi: &ModuleMorphism) -> Matrix {
    let blocks: Vec<&Matrix> = x.summands().iter().map(|&v| psi.map_at(v)).collect();
    Matrix::block_diag(x.field(), &blocks)
}

/// Matrix of `- ∘ φ: Hom(target φ, M) → Hom(source φ, M)` in Yoneda coordinates.
pub fn pre_composition_matrix(phi: &ProjMorphism, m: &Module) -> Matrix {
    let (src, tgt) = (phi.source(), phi.target());
    let f = phi.field();
    let mut basis_maps: Vec<Option<Matrix>> = vec![None; phi.algebra().dimension()];
    let rows = src.hom_dim(m);
    let cols = tgt.hom_dim(m);
    let mut out = Matrix::zeros(f, rows, cols);
    let mut r0 = 0;
    for (k, &u) in src.summands().iter().enumerate() {
        let mut c0 = 0;
        for (j, &w) in tgt.summands().iter().enumerate() {
            let mut block = Matrix::zeros(f, m.dim(u), m.dim(w));
            for (b, c) in phi.entry(j, k) {
                let action = basis_maps[b].get_or_insert_with(|| m.basis_map(b));
                block = &block + &action.scale(&c);
            }
            out.set_block(r0, c0, &block);
            c0 += m.dim(w);
        }
        r0 += m.dim(u);
    }
    out
}
