use std::fmt;

use crate::exactla::Side;
use crate::projcat::{factor_through, CategoryError, is_mono_cat, split_idempotent, star_dual, weak_cokernel, weak_kernel, ProjMorphism, ProjObject};

use super::{MorphismChain, TheoremError};

/// How the idempotent `d_{n+1} b_n` is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SplitStrategy {
    /// For `n = 1`, use `f = g = 1` when `d_2 b_1` is the identity.
    #[default]
    Auto,
    /// Always split the idempotent through its image.
    General,
}

/// Every intermediate morphism of one run of the construction. Fields after
/// the point of failure stay empty.
#[derive(Clone, Debug)]
pub struct ConstructionTrace {
    pub n: usize,
    pub a0: ProjMorphism,
    /// `a_1, …, a_{n+1}`.
    pub a: Vec<ProjMorphism>,
    /// `b_1, …, b_n`.
    pub b: Vec<ProjMorphism>,
    /// `c_1, …, c_n`.
    pub c: Vec<ProjMorphism>,
    /// `d_2, …, d_{n+2}`.
    pub d: Vec<ProjMorphism>,
    pub idempotent: Option<ProjMorphism>,
    /// `(C, f, g)` with `f g = e`, `g f = 1`.
    pub splitting: Option<(ProjObject, ProjMorphism, ProjMorphism)>,
    pub fast_path: bool,
    pub output: Option<MorphismChain>,
}

/// One recorded identity and whether it holds exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

fn eq_check(name: String, lhs: Result<ProjMorphism, CategoryError>, rhs: Result<ProjMorphism, CategoryError>) -> IdentityCheck {
    let holds = matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r);
    IdentityCheck { name, holds }
}

fn zero_check(name: String, value: Result<ProjMorphism, CategoryError>) -> IdentityCheck {
    IdentityCheck {
        name,
        holds: value.map(|m| m.is_zero()).unwrap_or(false),
    }
}

impl ConstructionTrace {
    fn empty(a0: &ProjMorphism, n: usize) -> ConstructionTrace {
        ConstructionTrace {
            n,
            a0: a0.clone(),
            a: Vec::new(),
            b: Vec::new(),
            c: Vec::new(),
            d: Vec::new(),
            idempotent: None,
            splitting: None,
            fast_path: false,
            output: None,
        }
    }

    /// `a_i` with `a_0` at index 0.
    fn a_at(&self, i: usize) -> &ProjMorphism {
        if i == 0 {
            &self.a0
        } else {
            &self.a[i - 1]
        }
    }

    /// Evaluates every identity the construction relies on. Only meaningful
    /// on a completed trace.
    pub fn check_identities(&self) -> Vec<IdentityCheck> {
        let n = self.n;
        let mut out = Vec::new();
        if self.a.len() != n + 1 || self.b.len() != n || self.c.len() != n || self.d.len() != n + 1 {
            out.push(IdentityCheck {
                name: "trace complete".into(),
                holds: false,
            });
            return out;
        }
        for i in 1..=n + 1 {
            out.push(zero_check(format!("a_{i} a_{} = 0", i - 1), self.a_at(i).compose(self.a_at(i - 1))));
        }
        for i in 1..n {
            out.push(zero_check(format!("b_{} b_{i} = 0", i + 1), self.b[i].compose(&self.b[i - 1])));
        }
        out.push(zero_check(format!("a_{} b_{n} = 0", n + 1), self.a[n].compose(&self.b[n - 1])));
        out.push(eq_check(format!("a_{n} = b_{n} c_{n}"), Ok(self.a[n - 1].clone()), self.b[n - 1].compose(&self.c[n - 1])));
        for i in 1..n {
            out.push(eq_check(
                format!("c_{} a_{i} = b_{i} c_{i}", i + 1),
                self.c[i].compose(&self.a[i - 1]),
                self.b[i - 1].compose(&self.c[i - 1]),
            ));
        }
        out.push(eq_check("c_1 = d_2 a_1".into(), Ok(self.c[0].clone()), self.d[0].compose(&self.a[0])));
        for i in 2..=n + 1 {
            let ci = if i == n + 1 {
                Ok(ProjMorphism::identity(self.a[n].source()))
            } else {
                Ok(self.c[i - 1].clone())
            };
            let lhs = ci.and_then(|c| self.b[i - 2].compose(&self.d[i - 2]).and_then(|bd| c.sub(&bd)));
            out.push(eq_check(format!("c_{i} - b_{} d_{i} = d_{} a_{i}", i - 1, i + 1), lhs, self.d[i - 1].compose(&self.a[i - 1])));
        }
        match (&self.idempotent, &self.splitting) {
            (Some(e), Some((_, f, g))) => {
                out.push(eq_check(format!("e = d_{} b_{n}", n + 1), Ok(e.clone()), self.d[n - 1].compose(&self.b[n - 1])));
                out.push(eq_check("e e = e".into(), e.compose(e), Ok(e.clone())));
                out.push(eq_check(format!("b_{n} e = b_{n}"), self.b[n - 1].compose(e), Ok(self.b[n - 1].clone())));
                out.push(eq_check("f g = e".into(), f.compose(g), Ok(e.clone())));
                out.push(IdentityCheck {
                    name: "g f = 1".into(),
                    holds: g.compose(f).map(|m| m.is_identity()).unwrap_or(false),
                });
            }
            _ => out.push(IdentityCheck {
                name: "idempotent split".into(),
                holds: false,
            }),
        }
        out
    }

    pub fn all_identities_hold(&self) -> bool {
        self.check_identities().iter().all(|c| c.holds)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, name: &str, first: usize, maps: &[ProjMorphism]) -> fmt::Result {
    for (k, m) in maps.iter().enumerate() {
        writeln!(f, "  {name}_{}: {m}", first + k)?;
    }
    Ok(())
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "construction trace (n = {})", self.n)?;
        writeln!(f, "  a_0: {}", self.a0)?;
        write_list(f, "a", 1, &self.a)?;
        write_list(f, "b", 1, &self.b)?;
        write_list(f, "c", 1, &self.c)?;
        write_list(f, "d", 2, &self.d)?;
        if let Some(e) = &self.idempotent {
            writeln!(f, "  e: {e}")?;
        }
        if let Some((obj, fm, g)) = &self.splitting {
            writeln!(f, "  C: {obj}")?;
            writeln!(f, "  f: {fm}")?;
            writeln!(f, "  g: {g}")?;
        }
        writeln!(f, "  fast path: {}", if self.fast_path { "yes" } else { "no" })?;
        match &self.output {
            Some(chain) => writeln!(f, "  output: {chain}")?,
            None => writeln!(f, "  output: none")?,
        }
        if self.output.is_some() {
            writeln!(f, "identities:")?;
            for c in self.check_identities() {
                writeln!(f, "  {}: {}", c.name, if c.holds { "ok" } else { "FAILED" })?;
            }
        }
        Ok(())
    }
}

/// `a_1, …, a_count` with `a_i` the minimal weak cokernel of `a_{i-1}`.
pub fn iterate_weak_cokernels(a0: &ProjMorphism, count: usize) -> MorphismChain {
    let mut out: Vec<ProjMorphism> = Vec::with_capacity(count);
    for _ in 0..count {
        let next = weak_cokernel(out.last().unwrap_or(a0));
        out.push(next);
    }
    MorphismChain::new(out).expect("weak cokernels compose")
}

/// `b_1, …, b_n` with `b_n` the minimal weak kernel of `a` and `b_i` that of
/// `b_{i+1}`. Fails with `MonoFailure` when `b_1` is not a monomorphism.
pub fn compute_n_kernel(a: &ProjMorphism, n: usize) -> Result<MorphismChain, TheoremError> {
    if n == 0 {
        return Err(TheoremError::InvalidN { n, min: 1 });
    }
    let mut rev: Vec<ProjMorphism> = Vec::with_capacity(n);
    for _ in 0..n {
        let next = weak_kernel(rev.last().unwrap_or(a));
        rev.push(next);
    }
    rev.reverse();
    if !is_mono_cat(&rev[0]) {
        return Err(TheoremError::MonoFailure { n });
    }
    MorphismChain::new(rev)
}

pub fn construct_n_cokernel(a0: &ProjMorphism, n: usize) -> Result<(MorphismChain, ConstructionTrace), TheoremError> {
    construct_n_cokernel_with(a0, n, SplitStrategy::Auto)
}

fn lift(
    pivot: &ProjMorphism,
    candidate: &ProjMorphism,
    side: Side,
    step: String,
    trace: &ConstructionTrace,
) -> Result<ProjMorphism, TheoremError> {
    factor_through(pivot, candidate, side)?.ok_or_else(|| TheoremError::LiftFailure {
        step,
        trace: Box::new(trace.clone()),
    })
}

/// Builds an `n`-cokernel `A_1 → ⋯ → A_n → C` of `a0`, `n ≥ 1`, assuming
/// `gldim mod Λ ≤ n + 1`.
pub fn construct_n_cokernel_with(
    a0: &ProjMorphism,
    n: usize,
    strategy: SplitStrategy,
) -> Result<(MorphismChain, ConstructionTrace), TheoremError> {
    if n == 0 {
        return Err(TheoremError::InvalidN { n, min: 1 });
    }
    let mut trace = ConstructionTrace::empty(a0, n);
    trace.a = iterate_weak_cokernels(a0, n + 1).morphisms().to_vec();
    trace.b = compute_n_kernel(&trace.a[n], n)?.morphisms().to_vec();

    // c_n, then c_i with c_{i+1} a_i = b_i c_i
    let mut c_rev = vec![lift(&trace.b[n - 1], &trace.a[n - 1], Side::Right, format!("c_{n}"), &trace)?];
    for i in (1..n).rev() {
        let cand = c_rev.last().expect("nonempty").compose(&trace.a[i - 1])?;
        c_rev.push(lift(&trace.b[i - 1], &cand, Side::Right, format!("c_{i}"), &trace)?);
    }
    c_rev.reverse();
    trace.c = c_rev;

    // d_2 with c_1 = d_2 a_1, then d_{i+1} a_i = c_i - b_{i-1} d_i
    let d2 = lift(&trace.a[0], &trace.c[0], Side::Left, "d_2".into(), &trace)?;
    trace.d.push(d2);
    for i in 2..=n + 1 {
        let ci = if i == n + 1 {
            ProjMorphism::identity(trace.a[n].source())
        } else {
            trace.c[i - 1].clone()
        };
        let cand = ci.sub(&trace.b[i - 2].compose(&trace.d[i - 2])?)?;
        let next = lift(&trace.a[i - 1], &cand, Side::Left, format!("d_{}", i + 1), &trace)?;
        trace.d.push(next);
    }

    let e = trace.d[n - 1].compose(&trace.b[n - 1])?;
    let bn = &trace.b[n - 1];
    let (object, f, g) = if strategy == SplitStrategy::Auto && n == 1 && e.is_identity() {
        trace.fast_path = true;
        let id = ProjMorphism::identity(bn.source());
        (bn.source().clone(), id.clone(), id)
    } else {
        let s = split_idempotent(&e)?;
        (s.object, s.f, s.g)
    };
    trace.idempotent = Some(e);

    let mut out: Vec<ProjMorphism> = trace.a[..n - 1].to_vec();
    out.push(g.compose(&trace.c[n - 1])?);
    let chain = MorphismChain::new(out)?;
    trace.splitting = Some((object, f, g));
    trace.output = Some(chain.clone());
    Ok((chain, trace))
}

/// An `n`-cokernel of `a0` computed without the lifting argument: the dual of
/// the minimal `n`-kernel of `a0^*` over the opposite algebra.
pub fn n_cokernel_by_duality(a0: &ProjMorphism, n: usize) -> Result<MorphismChain, TheoremError> {
    Ok(compute_n_kernel(&star_dual(a0), n)?.dual())
}

/// An `n`-kernel of `a`, obtained by running the cokernel construction over
/// the opposite algebra and dualizing back.
pub fn n_kernel_by_duality(a: &ProjMorphism, n: usize) -> Result<(MorphismChain, ConstructionTrace), TheoremError> {
    let (chain, trace) = construct_n_cokernel(&star_dual(a), n)?;
    Ok((chain.dual(), trace))
}
