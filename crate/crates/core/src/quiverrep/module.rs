use std::fmt;
use std::sync::Arc;

use crate::exactla::{Field, Matrix, Scalar, Side};

use super::algebra::{same_algebra, Path, PathAlgebra};
use super::ModuleError;

/// A finite-dimensional representation of the quiver of `algebra` satisfying its relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Module {
    /// `maps[α]` has shape `dims[target α] x dims[source α]`.
    pub fn new(
        algebra: Arc<PathAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Module, ModuleError> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(ModuleError::WrongArity);
        }
        for (i, (a, m)) in q.arrows().iter().zip(&maps).enumerate() {
            if m.field() != algebra.field() {
                return Err(ModuleError::FieldMismatch);
            }
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(ModuleError::ArrowShape { arrow: i });
            }
        }
        let module = Module {
            algebra,
            dims,
            maps,
        };
        if let Some(r) = module.violated_relation() {
            return Err(ModuleError::RelationViolated { relation: r });
        }
        Ok(module)
    }

    pub(crate) fn new_unchecked(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        let m = Module {
            algebra,
            dims,
            maps,
        };
        debug_assert!(m.violated_relation().is_none());
        m
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Module {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Module::new_unchecked(algebra, vec![0; n], maps)
    }

    /// Index of the first relation that does not evaluate to zero, if any.
    pub fn violated_relation(&self) -> Option<usize> {
        self.algebra.relations().iter().position(|rel| {
            let (s, t) = {
                let w = &rel.terms[0].1;
                let arrows = self.algebra.quiver().arrows();
                (arrows[w[0]].source, arrows[w[w.len() - 1]].target)
            };
            let mut acc = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
            for (c, w) in &rel.terms {
                acc = &acc + &self.word_map(w).scale(c);
            }
            !acc.is_zero()
        })
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Action of a nonempty word (application order).
    pub fn word_map(&self, word: &[usize]) -> Matrix {
        let mut it = word.iter();
        let first = *it.next().expect("word is nonempty");
        let mut acc = self.maps[first].clone();
        for &a in it {
            acc = &self.maps[a] * &acc;
        }
        acc
    }

    pub fn path_map(&self, p: &Path) -> Matrix {
        if p.is_trivial() {
            Matrix::identity(self.field(), self.dims[p.source])
        } else {
            self.word_map(&p.arrows)
        }
    }

    /// Action of basis element `b` of the algebra.
    pub fn basis_map(&self, b: usize) -> Matrix {
        self.path_map(&self.algebra.basis()[b])
    }

    /// Basis of the radical at each vertex: the span of all arrow images landing there.
    pub fn radical_bases(&self) -> Vec<Matrix> {
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let blocks: Vec<&Matrix> = q.arrows_into(v).map(|a| &self.maps[a]).collect();
                Matrix::hstack(self.field(), self.dims[v], &blocks).image_basis()
            })
            .collect()
    }

    /// Top multiplicities: `dim M_v - dim (rad M)_v`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases()
            .iter()
            .enumerate()
            .map(|(v, r)| self.dims[v] - r.cols())
            .collect()
    }

    /// Direct sum, summands stacked vertex-wise in the given order.
    pub fn direct_sum(algebra: &Arc<PathAlgebra>, parts: &[&Module]) -> Module {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..algebra.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.maps[a]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Module::new_unchecked(algebra.clone(), dims, maps)
    }

    /// The sub-representation spanned by the columns of `bases[v]` (assumed
    /// invariant under the arrows), with its inclusion.
    pub fn submodule(self: &Arc<Self>, bases: Vec<Matrix>) -> Result<(Arc<Module>, ModuleMorphism), ModuleError> {
        let q = self.algebra.quiver();
        let mut maps = Vec::with_capacity(q.arrows().len());
        for (i, a) in q.arrows().iter().enumerate() {
            let image = &self.maps[i] * &bases[a.source];
            let m = bases[a.target]
                .solve_factor(&image, Side::Right)?
                .ok_or(ModuleError::NotInvariant { arrow: i })?;
            maps.push(m);
        }
        let dims = bases.iter().map(Matrix::cols).collect();
        let sub = Arc::new(Module::new_unchecked(self.algebra.clone(), dims, maps));
        let incl = ModuleMorphism::new_unchecked(sub.clone(), self.clone(), bases);
        Ok((sub, incl))
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "module dims {:?}", self.dims)
    }
}

/// A vertex-wise linear map between modules commuting with every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: Arc<Module>,
    target: Arc<Module>,
    maps: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn new(source: Arc<Module>, target: Arc<Module>, maps: Vec<Matrix>) -> Result<ModuleMorphism, ModuleError> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if maps.len() != source.dims.len() {
            return Err(ModuleError::WrongArity);
        }
        for (v, m) in maps.iter().enumerate() {
            if m.field() != source.field() {
                return Err(ModuleError::FieldMismatch);
            }
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(ModuleError::VertexShape { vertex: v });
            }
        }
        let phi = ModuleMorphism { source, target, maps };
        if let Some(a) = phi.failing_square() {
            return Err(ModuleError::NotCommuting { arrow: a });
        }
        Ok(phi)
    }

    pub(crate) fn new_unchecked(source: Arc<Module>, target: Arc<Module>, maps: Vec<Matrix>) -> ModuleMorphism {
        let phi = ModuleMorphism { source, target, maps };
        debug_assert!(phi.failing_square().is_none(), "non-commuting square");
        phi
    }

    /// First arrow whose square fails to commute.
    pub fn failing_square(&self) -> Option<usize> {
        let q = self.source.algebra().quiver();
        q.arrows().iter().enumerate().position(|(i, a)| {
            &self.target.maps[i] * &self.maps[a.source] != &self.maps[a.target] * &self.source.maps[i]
        })
    }

    pub fn identity(m: &Arc<Module>) -> ModuleMorphism {
        let maps = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModuleMorphism::new_unchecked(m.clone(), m.clone(), maps)
    }

    pub fn zero(source: &Arc<Module>, target: &Arc<Module>) -> ModuleMorphism {
        let f = source.field();
        let maps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(f, t, s))
            .collect();
        ModuleMorphism::new_unchecked(source.clone(), target.clone(), maps)
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }

    pub fn map_at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        if *rhs.target != *self.source {
            return Err(ModuleError::NotComposable);
        }
        let maps = self.maps.iter().zip(&rhs.maps).map(|(a, b)| a * b).collect();
        Ok(ModuleMorphism::new_unchecked(rhs.source.clone(), self.target.clone(), maps))
    }

    fn zip(&self, rhs: &ModuleMorphism, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Result<ModuleMorphism, ModuleError> {
        if *self.source != *rhs.source || *self.target != *rhs.target {
            return Err(ModuleError::NotComposable);
        }
        let maps = self.maps.iter().zip(&rhs.maps).map(|(a, b)| f(a, b)).collect();
        Ok(ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps))
    }

    pub fn add(&self, rhs: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMorphism {
        let maps = self.maps.iter().map(|m| m.scale(s)).collect();
        ModuleMorphism::new_unchecked(self.source.clone(), self.target.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target && self.maps.iter().all(Matrix::is_identity)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    /// Vertex-wise rank of the map.
    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }
}

/// Indecomposable projective `P(v)`: basis the reduced paths starting at `v`,
/// arrows acting by path extension.
pub fn projective_of(algebra: &Arc<PathAlgebra>, v: usize) -> Module {
    free_module(algebra, &[v]).0
}

/// Simple module `S(v)`: one-dimensional at `v`, zero elsewhere.
pub fn simple_of(algebra: &Arc<PathAlgebra>, v: usize) -> Module {
    let f = algebra.field();
    let n = algebra.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| usize::from(w == v)).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    Module::new_unchecked(algebra.clone(), dims, maps)
}

/// Where each summand of a direct sum of indecomposable projectives sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLayout {
    /// Vertex of each summand, in summand order.
    pub summands: Vec<usize>,
    /// `offsets[i][w]`: first coordinate of summand `i` inside the space at vertex `w`.
    pub offsets: Vec<Vec<usize>>,
}

impl ProjLayout {
    /// Coordinate of the generator `e_v` of summand `i` at its own vertex.
    pub fn generator_coordinate(&self, algebra: &PathAlgebra, i: usize) -> usize {
        let v = self.summands[i];
        let pos = algebra
            .paths_between(v, v)
            .iter()
            .position(|&b| b == algebra.trivial_index(v))
            .expect("trivial path present");
        self.offsets[i][v] + pos
    }
}

/// `⊕ P(summands[i])`, summands stacked in order.
pub fn free_module(algebra: &Arc<PathAlgebra>, summands: &[usize]) -> (Module, ProjLayout) {
    let f = algebra.field();
    let n = algebra.vertex_count();
    let mut offsets = vec![vec![0; n]; summands.len()];
    let mut dims = vec![0; n];
    for (i, &v) in summands.iter().enumerate() {
        for w in 0..n {
            offsets[i][w] = dims[w];
            dims[w] += algebra.paths_between(v, w).len();
        }
    }
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let arrow_b = algebra.arrow_index_in_basis(ai);
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            for (i, &v) in summands.iter().enumerate() {
                let rows = algebra.paths_between(v, a.target);
                for (c, &p) in algebra.paths_between(v, a.source).iter().enumerate() {
                    for (b, coef) in algebra.mul_basis(p, arrow_b) {
                        let r = rows.iter().position(|x| x == b).expect("product stays in P(v)");
                        m.set(offsets[i][a.target] + r, offsets[i][a.source] + c, coef.clone());
                    }
                }
            }
            m
        })
        .collect();
    (
        Module::new_unchecked(algebra.clone(), dims, maps),
        ProjLayout {
            summands: summands.to_vec(),
            offsets,
        },
    )
}

/// The morphism `⊕ P(v_i) → target` sending generator `i` to `images[i] ∈ target_{v_i}`.
pub fn morphism_from_generators(
    source: &Arc<Module>,
    layout: &ProjLayout,
    target: &Arc<Module>,
    images: &[Vec<Scalar>],
) -> ModuleMorphism {
    let alg = source.algebra();
    let f = alg.field();
    let n = alg.vertex_count();
    let mut maps: Vec<Matrix> = (0..n).map(|w| Matrix::zeros(f, target.dim(w), source.dim(w))).collect();
    for (i, &v) in layout.summands.iter().enumerate() {
        let y = Matrix::from_columns(f, target.dim(v), std::slice::from_ref(&images[i]));
        for (w, map) in maps.iter_mut().enumerate() {
            for (c, &p) in alg.paths_between(v, w).iter().enumerate() {
                let col = &target.basis_map(p) * &y;
                map.set_block(0, layout.offsets[i][w] + c, &col);
            }
        }
    }
    ModuleMorphism::new_unchecked(source.clone(), target.clone(), maps)
}

/// Basis of `Hom(m, n)`: the canonical null-space basis of the commuting-square system.
pub fn hom_basis(m: &Arc<Module>, n: &Arc<Module>) -> Result<Vec<ModuleMorphism>, ModuleError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.vertex_count();
    // unknown X_v is dims_n[v] x dims_m[v], stored row-major after offset[v]
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (u, w) = (a.source, a.target);
        let na = n.arrow_map(ai);
        let ma = m.arrow_map(ai);
        // N_a X_u - X_w M_a = 0, entry (i, j)
        for i in 0..n.dim(w) {
            for j in 0..m.dim(u) {
                let mut row = vec![f.zero(); unknowns];
                for r in 0..n.dim(u) {
                    let idx = offset[u] + r * m.dim(u) + j;
                    row[idx] = &row[idx] + na.get(i, r);
                }
                for c in 0..m.dim(w) {
                    let idx = offset[w] + i * m.dim(w) + c;
                    row[idx] = &row[idx] - ma.get(c, j);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(f, rows.len(), unknowns, |r, c| rows[r][c].clone());
    let kernel = system.kernel_basis();
    Ok((0..kernel.cols())
        .map(|k| {
            let maps = (0..nv)
                .map(|v| {
                    Matrix::from_fn(f, n.dim(v), m.dim(v), |r, c| {
                        kernel.get(offset[v] + r * m.dim(v) + c, k).clone()
                    })
                })
                .collect();
            ModuleMorphism::new_unchecked(m.clone(), n.clone(), maps)
        })
        .collect())
}

/// Vertex-wise kernel with induced arrow maps, and its inclusion.
pub fn kernel_mod(phi: &ModuleMorphism) -> (Arc<Module>, ModuleMorphism) {
    let bases = phi.maps.iter().map(Matrix::kernel_basis).collect();
    phi.source
        .submodule(bases)
        .expect("kernels are sub-representations")
}

/// Vertex-wise image with its inclusion into the target.
pub fn image_mod(phi: &ModuleMorphism) -> (Arc<Module>, ModuleMorphism) {
    let bases = phi.maps.iter().map(Matrix::image_basis).collect();
    phi.target
        .submodule(bases)
        .expect("images are sub-representations")
}

/// Vertex-wise cokernel with induced arrow maps, and the projection onto it.
pub fn cokernel_mod(phi: &ModuleMorphism) -> (Arc<Module>, ModuleMorphism) {
    let target = &phi.target;
    let alg = target.algebra();
    // π_v: rows spanning the left null space of φ_v
    let projections: Vec<Matrix> = phi.maps.iter().map(|m| m.transpose().kernel_basis().transpose()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let rhs = &projections[a.target] * target.arrow_map(ai);
            projections[a.source]
                .solve_factor(&rhs, Side::Left)
                .expect("shapes agree")
                .expect("arrow maps descend to the cokernel")
        })
        .collect();
    let dims = projections.iter().map(Matrix::rows).collect();
    let c = Arc::new(Module::new_unchecked(alg.clone(), dims, maps));
    let pi = ModuleMorphism::new_unchecked(target.clone(), c.clone(), projections);
    (c, pi)
}

/// A projective cover `ε: ⊕ P(v)^{m_v} → M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// `m_v`: dimension of the top of `M` at `v`.
    pub multiplicities: Vec<usize>,
    /// Generator images in `M`, one per summand, in summand order.
    pub generators: Vec<Vec<Scalar>>,
    pub layout: ProjLayout,
    pub module: Arc<Module>,
    pub epsilon: ModuleMorphism,
}

/// Minimal projective cover. Generators are chosen greedily among the standard
/// basis vectors of `M_v` that are independent modulo the radical.
pub fn projective_cover(m: &Arc<Module>) -> ProjectiveCover {
    let alg = m.algebra();
    let f = alg.field();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    let mut multiplicities = vec![0; alg.vertex_count()];
    for (v, rad) in m.radical_bases().into_iter().enumerate() {
        let mut span = rad;
        let mut rank = span.cols();
        for k in 0..m.dim(v) {
            if rank == m.dim(v) {
                break;
            }
            let e: Vec<Scalar> = (0..m.dim(v)).map(|r| if r == k { f.one() } else { f.zero() }).collect();
            let col = Matrix::from_columns(f, m.dim(v), std::slice::from_ref(&e));
            let candidate = Matrix::hstack(f, m.dim(v), &[&span, &col]);
            let r = candidate.rank();
            if r > rank {
                span = candidate;
                rank = r;
                summands.push(v);
                generators.push(e);
                multiplicities[v] += 1;
            }
        }
    }
    let (module, layout) = free_module(alg, &summands);
    let module = Arc::new(module);
    let epsilon = morphism_from_generators(&module, &layout, m, &generators);
    ProjectiveCover {
        multiplicities,
        generators,
        layout,
        module,
        epsilon,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;
    use crate::quiverrep::{Quiver, Relation};

    const Q: Field = Field::Rational;

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2")]).unwrap();
        PathAlgebra::build(q, Q, vec![]).unwrap()
    }

    fn a3r() -> Arc<PathAlgebra> {
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let w = q.word(&["a", "b"]).unwrap();
        PathAlgebra::build(q, Q, vec![Relation::monomial(Q, w)]).unwrap()
    }

    fn arc(m: Module) -> Arc<Module> {
        Arc::new(m)
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = a2();
        let p1 = projective_of(&a, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert!(p1.arrow_map(0).is_identity());
        assert_eq!(projective_of(&a, 1).dims(), &[0, 1]);

        let b = a3r();
        assert_eq!(projective_of(&b, 0).dims(), &[1, 1, 0]);
        assert_eq!(projective_of(&b, 1).dims(), &[0, 1, 1]);
        assert_eq!(projective_of(&b, 2).dims(), &[0, 0, 1]);
        for v in 0..3 {
            assert!(simple_of(&b, v).violated_relation().is_none());
        }
    }

    #[test]
    fn module_rejects_relation_violation() {
        let b = a3r();
        let one = Matrix::identity(Q, 1);
        assert_eq!(
            Module::new(b, vec![1, 1, 1], vec![one.clone(), one]),
            Err(ModuleError::RelationViolated { relation: 0 })
        );
    }

    #[test]
    fn hom_dimensions() {
        let a = a2();
        let p1 = arc(projective_of(&a, 0));
        let p2 = arc(projective_of(&a, 1));
        assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 1);
        assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 0);

        let b = a3r();
        let s1 = arc(simple_of(&b, 0));
        for v in 0..3 {
            let p = arc(projective_of(&b, v));
            assert!(hom_basis(&s1, &p).unwrap().is_empty());
        }
    }

    #[test]
    fn identity_lies_in_hom_span() {
        let b = a3r();
        let (m, _) = free_module(&b, &[0, 1, 1, 2]);
        let m = arc(m);
        let basis = hom_basis(&m, &m).unwrap();
        let id = ModuleMorphism::identity(&m);
        // flatten and solve for coordinates
        let flat = |phi: &ModuleMorphism| -> Vec<Scalar> {
            phi.maps().iter().flat_map(|x| x.entries().to_vec()).collect()
        };
        let cols: Vec<Vec<Scalar>> = basis.iter().map(flat).collect();
        let len = flat(&id).len();
        let a = Matrix::from_columns(Q, len, &cols);
        let b = Matrix::from_columns(Q, len, &[flat(&id)]);
        assert!(a.solve_factor(&b, Side::Right).unwrap().is_some());
    }

    #[test]
    fn kernel_and_cokernel_examples() {
        let a = a2();
        let p1 = arc(projective_of(&a, 0));
        let s1 = arc(simple_of(&a, 0));
        let cover = projective_cover(&s1);
        assert_eq!(cover.multiplicities, vec![1, 0]);
        assert_eq!(cover.module.dims(), p1.dims());
        let (k, iota) = kernel_mod(&cover.epsilon);
        assert_eq!(k.dims(), &[0, 1]);
        assert!(iota.is_injective());
        assert!(cover.epsilon.compose(&iota).unwrap().is_zero());

        let p2 = arc(projective_of(&a, 1));
        let incl = hom_basis(&p2, &p1).unwrap().remove(0);
        let (c, pi) = cokernel_mod(&incl);
        assert_eq!(c.dims(), &[1, 0]);
        assert!(pi.is_surjective());
        assert!(pi.compose(&incl).unwrap().is_zero());

        let id = ModuleMorphism::identity(&p1);
        assert!(kernel_mod(&id).0.is_zero());
        assert!(cokernel_mod(&id).0.is_zero());
    }

    #[test]
    fn cover_examples() {
        let a = a2();
        let p1 = arc(projective_of(&a, 0));
        let c = projective_cover(&p1);
        assert_eq!(c.multiplicities, vec![1, 0]);
        assert!(c.epsilon.is_injective() && c.epsilon.is_surjective());

        let s = arc(Module::direct_sum(&a, &[&simple_of(&a, 0), &simple_of(&a, 1)]));
        let c = projective_cover(&s);
        assert_eq!(c.multiplicities, vec![1, 1]);
        assert!(c.epsilon.is_surjective());
        let (k, _) = kernel_mod(&c.epsilon);
        // kernel of P(1) ⊕ P(2) → S(1) ⊕ S(2) is rad P(1) ≅ S(2)
        assert_eq!(k.dims(), &[0, 1]);
    }
}
