//! Line-oriented algebra description files.
//!
//! ```text
//! field Q              # or: field F 5
//! vertex 1
//! vertex 2
//! arrow a 1 2
//! relation 1 * b a     # composition order: a first, then b
//! cap path-length 64   # optional
//! cap cutoff 8         # optional
//! ```

use std::fmt;
use std::path::Path as FsPath;
use std::sync::Arc;

use kercoker::exactla::{Field, Scalar};
use kercoker::quiverrep::{AlgebraError, PathAlgebra, Quiver, Relation, DEFAULT_PATH_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecErrorKind {
    Parse(String),
    UnknownField,
    DanglingArrowEndpoint,
    NonAdmissible,
    InvalidAlgebra(String),
    Io(String),
}

/// A diagnostic pointing at a line, a 1-based column and the offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub kind: SpecErrorKind,
    pub line: usize,
    pub column: usize,
    pub token: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            SpecErrorKind::Parse(msg) => msg.clone(),
            SpecErrorKind::UnknownField => "unknown field".to_string(),
            SpecErrorKind::DanglingArrowEndpoint => "arrow endpoint is not a declared vertex".to_string(),
            SpecErrorKind::NonAdmissible => "relation contains a path of length less than 2".to_string(),
            SpecErrorKind::InvalidAlgebra(msg) => msg.clone(),
            SpecErrorKind::Io(msg) => return write!(f, "cannot read algebra file: {msg}"),
        };
        write!(f, "line {}, column {}: {what} (at `{}`)", self.line, self.column, self.token)
    }
}

impl std::error::Error for SpecError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    fn error(&self, kind: SpecErrorKind) -> SpecError {
        SpecError {
            kind,
            line: self.line,
            column: self.column,
            token: self.text.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSpec {
    pub name: Token,
    pub source: Token,
    pub target: Token,
}

/// One term: coefficient and arrow names in composition order (rightmost first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermSpec {
    pub coefficient: Scalar,
    pub arrows: Vec<Token>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub keyword: Token,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpecFile {
    pub field: Field,
    pub vertices: Vec<Token>,
    pub arrows: Vec<ArrowSpec>,
    pub relations: Vec<RelationSpec>,
    pub path_cap: Option<usize>,
    pub cutoff: Option<usize>,
}

fn tokenize(line_no: usize, line: &str) -> Vec<Token> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: content[s..i].to_string(),
                    line: line_no,
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn expect_count(tokens: &[Token], count: usize, usage: &str) -> Result<(), SpecError> {
    if tokens.len() == count {
        return Ok(());
    }
    let at = tokens.get(count).unwrap_or(&tokens[tokens.len() - 1]);
    Err(at.error(SpecErrorKind::Parse(format!("expected `{usage}`"))))
}

fn parse_count(t: &Token) -> Result<usize, SpecError> {
    t.text
        .parse()
        .map_err(|_| t.error(SpecErrorKind::Parse("expected a nonnegative integer".into())))
}

fn parse_field(tokens: &[Token]) -> Result<Field, SpecError> {
    match tokens.get(1).map(|t| t.text.as_str()) {
        Some("Q") => {
            expect_count(tokens, 2, "field Q")?;
            Ok(Field::Rational)
        }
        Some("F") => {
            expect_count(tokens, 3, "field F <prime>")?;
            let p: u64 = tokens[2]
                .text
                .parse()
                .map_err(|_| tokens[2].error(SpecErrorKind::Parse("expected a prime modulus".into())))?;
            Field::prime(p).map_err(|_| tokens[2].error(SpecErrorKind::Parse("modulus must be a prime below 2^32".into())))
        }
        Some(_) => Err(tokens[1].error(SpecErrorKind::UnknownField)),
        None => Err(tokens[0].error(SpecErrorKind::Parse("expected `field Q` or `field F <prime>`".into()))),
    }
}

fn parse_relation(field: Field, tokens: &[Token]) -> Result<RelationSpec, SpecError> {
    let keyword = tokens[0].clone();
    let body = &tokens[1..];
    if body.is_empty() {
        return Err(keyword.error(SpecErrorKind::Parse("empty relation".into())));
    }
    let mut terms = Vec::new();
    for chunk in body.split(|t| t.text == "+") {
        let first = chunk.first().ok_or_else(|| {
            let plus = body.iter().find(|t| t.text == "+").unwrap_or(&keyword);
            plus.error(SpecErrorKind::Parse("empty term".into()))
        })?;
        let (coefficient, names) = match chunk.iter().position(|t| t.text == "*") {
            Some(1) => {
                let c = field
                    .parse_scalar(&first.text)
                    .ok_or_else(|| first.error(SpecErrorKind::Parse(format!("invalid coefficient in field {field}"))))?;
                (c, &chunk[2..])
            }
            Some(k) => return Err(chunk[k].error(SpecErrorKind::Parse("expected `<coefficient> * <arrows>`".into()))),
            None => (field.one(), chunk),
        };
        let Some(last) = names.last() else {
            return Err(first.error(SpecErrorKind::Parse("term has no arrows".into())));
        };
        if names.len() < 2 {
            return Err(last.error(SpecErrorKind::NonAdmissible));
        }
        terms.push(TermSpec {
            coefficient,
            arrows: names.to_vec(),
        });
    }
    Ok(RelationSpec { keyword, terms })
}

/// Parses the text of an algebra file.
pub fn parse_algebra_str(text: &str) -> Result<AlgebraSpecFile, SpecError> {
    let lines: Vec<Vec<Token>> = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(i + 1, l))
        .filter(|t| !t.is_empty())
        .collect();

    let mut field: Option<(Field, &Token)> = None;
    for tokens in lines.iter().filter(|t| t[0].text == "field") {
        if let Some((_, prev)) = field {
            return Err(tokens[0].error(SpecErrorKind::Parse(format!("field already declared on line {}", prev.line))));
        }
        field = Some((parse_field(tokens)?, &tokens[0]));
    }
    let field = field.map(|(f, _)| f).unwrap_or(Field::Rational);

    let mut spec = AlgebraSpecFile {
        field,
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        path_cap: None,
        cutoff: None,
    };
    for tokens in &lines {
        match tokens[0].text.as_str() {
            "field" => {}
            "vertex" => {
                expect_count(tokens, 2, "vertex <label>")?;
                if spec.vertices.iter().any(|v| v.text == tokens[1].text) {
                    return Err(tokens[1].error(SpecErrorKind::Parse("duplicate vertex".into())));
                }
                spec.vertices.push(tokens[1].clone());
            }
            "arrow" => {
                expect_count(tokens, 4, "arrow <name> <source> <target>")?;
                if spec.arrows.iter().any(|a| a.name.text == tokens[1].text) {
                    return Err(tokens[1].error(SpecErrorKind::Parse("duplicate arrow".into())));
                }
                spec.arrows.push(ArrowSpec {
                    name: tokens[1].clone(),
                    source: tokens[2].clone(),
                    target: tokens[3].clone(),
                });
            }
            "relation" => spec.relations.push(parse_relation(field, tokens)?),
            "cap" => {
                expect_count(tokens, 3, "cap path-length|cutoff <n>")?;
                let n = parse_count(&tokens[2])?;
                match tokens[1].text.as_str() {
                    "path-length" => spec.path_cap = Some(n),
                    "cutoff" => spec.cutoff = Some(n),
                    _ => return Err(tokens[1].error(SpecErrorKind::UnknownField)),
                }
            }
            _ => return Err(tokens[0].error(SpecErrorKind::UnknownField)),
        }
    }

    for a in &spec.arrows {
        for end in [&a.source, &a.target] {
            if !spec.vertices.iter().any(|v| v.text == end.text) {
                return Err(end.error(SpecErrorKind::DanglingArrowEndpoint));
            }
        }
    }
    for r in &spec.relations {
        for name in r.terms.iter().flat_map(|t| &t.arrows) {
            if !spec.arrows.iter().any(|a| a.name.text == name.text) {
                return Err(name.error(SpecErrorKind::Parse("unknown arrow".into())));
            }
        }
    }
    Ok(spec)
}

pub fn parse_algebra_file(path: &FsPath) -> Result<AlgebraSpecFile, SpecError> {
    let text = std::fs::read_to_string(path).map_err(|e| SpecError {
        kind: SpecErrorKind::Io(format!("{}: {e}", path.display())),
        line: 0,
        column: 0,
        token: String::new(),
    })?;
    parse_algebra_str(&text)
}

impl AlgebraSpecFile {
    /// Builds the path algebra, attaching algebra-level failures to the
    /// offending relation.
    pub fn build(&self) -> Result<Arc<PathAlgebra>, SpecError> {
        let vertices: Vec<String> = self.vertices.iter().map(|t| t.text.clone()).collect();
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| (a.name.text.clone(), a.source.text.clone(), a.target.text.clone()))
            .collect();
        let first_token = self
            .vertices
            .first()
            .cloned()
            .unwrap_or_else(|| Token { text: String::new(), line: 1, column: 1 });
        let quiver = Quiver::new(vertices, arrows).map_err(|e| first_token.error(SpecErrorKind::InvalidAlgebra(e.to_string())))?;
        let relations: Vec<Relation> = self
            .relations
            .iter()
            .map(|r| {
                Relation::new(
                    r.terms
                        .iter()
                        .map(|t| {
                            let word = t
                                .arrows
                                .iter()
                                .rev()
                                .map(|n| quiver.arrow_index(&n.text).expect("arrow names checked at parse time"))
                                .collect();
                            (t.coefficient.clone(), word)
                        })
                        .collect(),
                )
            })
            .collect();
        let cap = self.path_cap.unwrap_or(DEFAULT_PATH_CAP);
        PathAlgebra::build_with_cap(quiver, self.field, relations, cap).map_err(|e| {
            let at = |i: usize| self.relations[i].keyword.clone();
            match e {
                AlgebraError::NonAdmissible { relation } => at(relation).error(SpecErrorKind::NonAdmissible),
                AlgebraError::NotComposable { relation } | AlgebraError::NotParallel { relation } | AlgebraError::FieldMismatch { relation } => {
                    at(relation).error(SpecErrorKind::InvalidAlgebra(e.to_string()))
                }
                other => {
                    let t = self.relations.first().map(|r| r.keyword.clone()).unwrap_or(first_token.clone());
                    t.error(SpecErrorKind::InvalidAlgebra(other.to_string()))
                }
            }
        })
    }
}

/// One relation in file syntax, arrow names in composition order.
pub fn relation_text(algebra: &PathAlgebra, relation: &Relation) -> String {
    relation
        .terms
        .iter()
        .map(|(c, word)| {
            let names: Vec<&str> = word.iter().rev().map(|&a| algebra.quiver().arrows()[a].name.as_str()).collect();
            format!("{c} * {}", names.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Serializes an algebra in the file format; parsing the result rebuilds an
/// equal algebra.
pub fn write_algebra(algebra: &PathAlgebra) -> String {
    let q = algebra.quiver();
    let mut out = format!("field {}\n", algebra.field());
    for v in q.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.name, q.vertices()[a.source], q.vertices()[a.target]));
    }
    for r in algebra.relations() {
        out.push_str(&format!("relation {}\n", relation_text(algebra, r)));
    }
    if algebra.path_cap() != DEFAULT_PATH_CAP {
        out.push_str(&format!("cap path-length {}\n", algebra.path_cap()));
    }
    out
}
