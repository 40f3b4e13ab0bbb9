//! Small reference algebras over `Q`.

use std::sync::Arc;

use crate::exactla::Field;
use crate::quiverrep::{PathAlgebra, Quiver, Relation};

/// Two vertices, no arrows: `k × k`, semisimple.
pub fn semi2(field: Field) -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1", "2"], &[]).expect("valid quiver");
    PathAlgebra::build(q, field, vec![]).expect("valid algebra")
}

/// `1 --a--> 2`, hereditary of global dimension 1.
pub fn a2(field: Field) -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2")]).expect("valid quiver");
    PathAlgebra::build(q, field, vec![]).expect("valid algebra")
}

/// `1 --a--> 2 --b--> 3` with `b·a = 0`, global dimension 2.
pub fn a3r(field: Field) -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).expect("valid quiver");
    let ab = q.word(&["a", "b"]).expect("arrows exist");
    PathAlgebra::build(q, field, vec![Relation::monomial(field, ab)]).expect("valid algebra")
}

/// One loop `x` with `x² = 0`: `k[x]/(x²)`, infinite global dimension.
pub fn loop2(field: Field) -> Arc<PathAlgebra> {
    let q = Quiver::from_strs(&["1"], &[("x", "1", "1")]).expect("valid quiver");
    let xx = q.word(&["x", "x"]).expect("arrow exists");
    PathAlgebra::build(q, field, vec![Relation::monomial(field, xx)]).expect("valid algebra")
}

/// `(name, algebra)` for the whole zoo.
pub fn all(field: Field) -> Vec<(&'static str, Arc<PathAlgebra>)> {
    vec![
        ("semi2", semi2(field)),
        ("a2", a2(field)),
        ("a3r", a3r(field)),
        ("loop2", loop2(field)),
    ]
}
