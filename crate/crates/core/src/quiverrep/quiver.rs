use std::collections::HashSet;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labelled vertices and named arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source label, target label)`.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver, AlgebraError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(AlgebraError::DuplicateVertex(v.clone()));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        let mut names = HashSet::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(AlgebraError::DuplicateArrow(name));
            }
            let source = q.vertex_index(&s).ok_or(AlgebraError::UnknownVertex(s))?;
            let target = q.vertex_index(&t).ok_or(AlgebraError::UnknownVertex(t))?;
            q.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(q)
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver, AlgebraError> {
        Quiver::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrow indices for names listed in application order.
    pub fn word(&self, names: &[&str]) -> Result<Vec<usize>, AlgebraError> {
        names
            .iter()
            .map(|n| {
                self.arrow_index(n)
                    .ok_or_else(|| AlgebraError::UnknownArrow(n.to_string()))
            })
            .collect()
    }

    /// Same vertices and arrow names, every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Arrows ending at `v`.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_quivers() {
        assert_eq!(
            Quiver::from_strs(&["1", "1"], &[]),
            Err(AlgebraError::DuplicateVertex("1".into()))
        );
        assert_eq!(
            Quiver::from_strs(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]),
            Err(AlgebraError::DuplicateArrow("a".into()))
        );
        assert_eq!(
            Quiver::from_strs(&["1"], &[("a", "1", "3")]),
            Err(AlgebraError::UnknownVertex("3".into()))
        );
    }

    #[test]
    fn reversal_is_involutive() {
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert_eq!(q.reversed().arrows()[0].source, 1);
        assert_eq!(q.reversed().reversed(), q);
    }
}
