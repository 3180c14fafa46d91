//! The line-oriented diagram file format.
//!
//! ```text
//! model ptset|abgroup|grp
//! object <name> size <n>                      # ptset
//! object <name> gens <p> rels [r11 r12; ...]  # abgroup, one row per generator
//! object <name> group <catalog-name>          # grp
//! object <name> table <n> [row; row; ...]     # grp
//! morph <name> <src> <dst> [entries]          # images, or a dst.rank x src.rank matrix
//! lambek f g f' g' a b c
//! ```
//!
//! `#` starts a comment; tokens are whitespace-separated; a bracket group
//! must close on its own line.

use lambek_category::LambekDiagram;
use lambek_models::{AbExact, AbMapExact, AbObjectExact, Grp, GrpHom, Pt, PtMap, PtObject};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error on line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown name `{name}`")]
    UnknownName { line: usize, name: String },
    #[error("line {line}: duplicate name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("morphism `{name}` has mismatched endpoints for its place in the diagram")]
    EndpointMismatch { name: String },
    #[error("square {square} does not commute")]
    NonCommutingSquare { square: &'static str },
    #[error("entity `{name}` is invalid: {msg}")]
    InvalidEntity { name: String, msg: String },
    #[error("document is missing a `{0}` declaration")]
    Missing(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelTag {
    Ptset,
    Abgroup,
    Grp,
}

impl ModelTag {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ptset" => Some(ModelTag::Ptset),
            "abgroup" => Some(ModelTag::Abgroup),
            "grp" => Some(ModelTag::Grp),
            _ => None,
        }
    }
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelTag::Ptset => "ptset",
            ModelTag::Abgroup => "abgroup",
            ModelTag::Grp => "grp",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjDecl {
    PtSize(usize),
    AbPres { gens: usize, rels: Vec<Vec<i64>> },
    GrpNamed(String),
    GrpTable { order: usize, rows: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Eq)]
pub struct MorphDecl {
    pub src: String,
    pub dst: String,
    pub rows: Vec<Vec<i64>>,
    pub line: usize,
}

// Line numbers are diagnostics, not content.
impl PartialEq for MorphDecl {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.dst == other.dst && self.rows == other.rows
    }
}

#[derive(Debug, Clone, Eq)]
pub struct DiagramDoc {
    pub model: ModelTag,
    pub objects: Vec<(String, ObjDecl)>,
    pub morphs: Vec<(String, MorphDecl)>,
    /// Names bound to `f g f' g' a b c`, with the line of the binding.
    pub lambek: [String; 7],
    pub lambek_line: usize,
}

impl PartialEq for DiagramDoc {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model
            && self.objects == other.objects
            && self.morphs == other.morphs
            && self.lambek == other.lambek
    }
}

/// A typed diagram in whichever model the document declared.
pub enum AnyDiagram {
    Ptset(LambekDiagram<Pt>),
    Abgroup(LambekDiagram<AbExact>),
    Grp(LambekDiagram<Grp>),
}

impl DiagramDoc {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut model: Option<ModelTag> = None;
        let mut objects: Vec<(String, ObjDecl)> = Vec::new();
        let mut morphs: Vec<(String, MorphDecl)> = Vec::new();
        let mut lambek: Option<([String; 7], usize)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = split_word(content);
            match head {
                "model" => {
                    let tag = ModelTag::parse(rest.trim()).ok_or_else(|| ParseError::Syntax {
                        line,
                        msg: format!("unknown model `{}`", rest.trim()),
                    })?;
                    if model.is_some() {
                        return Err(ParseError::Syntax {
                            line,
                            msg: "model declared twice".into(),
                        });
                    }
                    model = Some(tag);
                }
                "object" => {
                    let model = model.ok_or(ParseError::Syntax {
                        line,
                        msg: "object declared before model".into(),
                    })?;
                    let (name, decl) = parse_object(model, rest, line)?;
                    if objects.iter().any(|(n, _)| n == &name) {
                        return Err(ParseError::DuplicateName { line, name });
                    }
                    objects.push((name, decl));
                }
                "morph" => {
                    let (name, decl) = parse_morph(rest, line)?;
                    if morphs.iter().any(|(n, _)| n == &name) {
                        return Err(ParseError::DuplicateName { line, name });
                    }
                    morphs.push((name, decl));
                }
                "lambek" => {
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if names.len() != 7 {
                        return Err(ParseError::Syntax {
                            line,
                            msg: format!("lambek needs 7 morphism names, got {}", names.len()),
                        });
                    }
                    let arr: [String; 7] = std::array::from_fn(|i| names[i].to_string());
                    lambek = Some((arr, line));
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        msg: format!("unknown directive `{other}`"),
                    });
                }
            }
        }

        let model = model.ok_or(ParseError::Missing("model"))?;
        let (lambek, lambek_line) = lambek.ok_or(ParseError::Missing("lambek"))?;
        Ok(DiagramDoc {
            model,
            objects,
            morphs,
            lambek,
            lambek_line,
        })
    }

    /// Canonical text form; `parse ∘ serialize` is the identity on parsed
    /// documents.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("model {}\n", self.model));
        for (name, decl) in &self.objects {
            match decl {
                ObjDecl::PtSize(n) => out.push_str(&format!("object {name} size {n}\n")),
                ObjDecl::AbPres { gens, rels } => out.push_str(&format!(
                    "object {name} gens {gens} rels {}\n",
                    brackets_i64(rels)
                )),
                ObjDecl::GrpNamed(g) => out.push_str(&format!("object {name} group {g}\n")),
                ObjDecl::GrpTable { order, rows } => {
                    let rows: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|r| r.iter().map(|&x| x as i64).collect())
                        .collect();
                    out.push_str(&format!(
                        "object {name} table {order} {}\n",
                        brackets_i64(&rows)
                    ));
                }
            }
        }
        for (name, m) in &self.morphs {
            out.push_str(&format!(
                "morph {name} {} {} {}\n",
                m.src,
                m.dst,
                brackets_i64(&m.rows)
            ));
        }
        out.push_str(&format!("lambek {}\n", self.lambek.join(" ")));
        out
    }

    /// Resolves names, validates payloads, endpoints and commutativity.
    pub fn build(&self) -> Result<AnyDiagram, ParseError> {
        match self.model {
            ModelTag::Ptset => Ok(AnyDiagram::Ptset(build_ptset(self)?)),
            ModelTag::Abgroup => Ok(AnyDiagram::Abgroup(build_abgroup(self)?)),
            ModelTag::Grp => Ok(AnyDiagram::Grp(build_grp(self)?)),
        }
    }
}

fn split_word(s: &str) -> (&str, &str) {
    match s.split_once(char::is_whitespace) {
        Some((w, rest)) => (w, rest.trim_start()),
        None => (s, ""),
    }
}

fn brackets_i64(rows: &[Vec<i64>]) -> String {
    let inner = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ");
    format!("[{inner}]")
}

/// Parses a `[a b; c d]` group into rows. An empty group `[]` is zero rows.
fn parse_brackets(s: &str, line: usize) -> Result<Vec<Vec<i64>>, ParseError> {
    let s = s.trim();
    if !s.starts_with('[') || !s.ends_with(']') {
        return Err(ParseError::Syntax {
            line,
            msg: "expected a bracketed [..] group".into(),
        });
    }
    let inner = &s[1..s.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    for chunk in inner.split(';') {
        let row: Result<Vec<i64>, _> = chunk
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| ParseError::Syntax {
                    line,
                    msg: format!("`{t}` is not an integer"),
                })
            })
            .collect();
        rows.push(row?);
    }
    Ok(rows)
}

fn parse_object(
    model: ModelTag,
    rest: &str,
    line: usize,
) -> Result<(String, ObjDecl), ParseError> {
    let (name, rest) = split_word(rest);
    if name.is_empty() {
        return Err(ParseError::Syntax {
            line,
            msg: "object needs a name".into(),
        });
    }
    let name = name.to_string();
    let (kind, rest) = split_word(rest);
    let decl = match (model, kind) {
        (ModelTag::Ptset, "size") => {
            let n = parse_usize(rest.trim(), line)?;
            ObjDecl::PtSize(n)
        }
        (ModelTag::Abgroup, "gens") => {
            let (count, rest) = split_word(rest);
            let gens = parse_usize(count, line)?;
            let (kw, rest) = split_word(rest);
            if kw != "rels" {
                return Err(ParseError::Syntax {
                    line,
                    msg: format!("expected `rels`, got `{kw}`"),
                });
            }
            let rels = parse_brackets(rest, line)?;
            ObjDecl::AbPres { gens, rels }
        }
        (ModelTag::Grp, "group") => ObjDecl::GrpNamed(rest.trim().to_string()),
        (ModelTag::Grp, "table") => {
            let (count, rest) = split_word(rest);
            let order = parse_usize(count, line)?;
            let rows = parse_brackets(rest, line)?;
            let rows: Result<Vec<Vec<usize>>, ParseError> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| {
                            usize::try_from(x).map_err(|_| ParseError::Syntax {
                                line,
                                msg: "table entries must be nonnegative".into(),
                            })
                        })
                        .collect()
                })
                .collect();
            ObjDecl::GrpTable { order, rows: rows? }
        }
        (m, k) => {
            return Err(ParseError::Syntax {
                line,
                msg: format!("object kind `{k}` is not valid for model {m}"),
            });
        }
    };
    Ok((name, decl))
}

fn parse_morph(rest: &str, line: usize) -> Result<(String, MorphDecl), ParseError> {
    let (name, rest) = split_word(rest);
    let (src, rest) = split_word(rest);
    let (dst, rest) = split_word(rest);
    if name.is_empty() || src.is_empty() || dst.is_empty() {
        return Err(ParseError::Syntax {
            line,
            msg: "morph needs a name, a source and a target".into(),
        });
    }
    let rows = parse_brackets(rest, line)?;
    Ok((
        name.to_string(),
        MorphDecl {
            src: src.to_string(),
            dst: dst.to_string(),
            rows,
            line,
        },
    ))
}

fn parse_usize(s: &str, line: usize) -> Result<usize, ParseError> {
    s.parse::<usize>().map_err(|_| ParseError::Syntax {
        line,
        msg: format!("`{s}` is not a nonnegative integer"),
    })
}

/// The generic assembly: resolve the seven names, check the endpoint
/// layout, then hand the squares to the engine constructor.
fn assemble<M, FSrc, FDst>(
    doc: &DiagramDoc,
    maps: &HashMap<String, M>,
    src_of: FSrc,
    dst_of: FDst,
) -> Result<[M; 7], ParseError>
where
    M: Clone,
    FSrc: Fn(&M) -> String,
    FDst: Fn(&M) -> String,
{
    let mut resolved: Vec<M> = Vec::with_capacity(7);
    for name in &doc.lambek {
        let m = maps.get(name).ok_or_else(|| ParseError::UnknownName {
            line: doc.lambek_line,
            name: name.clone(),
        })?;
        resolved.push(m.clone());
    }
    let [f, g, f2, g2, a, b, c]: [M; 7] = resolved.try_into().map_err(|_| ParseError::Syntax {
        line: doc.lambek_line,
        msg: "lambek binding must have 7 names".into(),
    })?;

    // Expected layout: f: A->B, g: B->C, f': A2->B2, g': B2->C2,
    // a: A->A2, b: B->B2, c: C->C2.
    let names = &doc.lambek;
    let check = |cond: bool, i: usize| -> Result<(), ParseError> {
        if cond {
            Ok(())
        } else {
            Err(ParseError::EndpointMismatch {
                name: names[i].clone(),
            })
        }
    };
    check(src_of(&g) == dst_of(&f), 1)?;
    check(src_of(&g2) == dst_of(&f2), 3)?;
    check(src_of(&a) == src_of(&f) && dst_of(&a) == src_of(&f2), 4)?;
    check(src_of(&b) == dst_of(&f) && dst_of(&b) == dst_of(&f2), 5)?;
    check(src_of(&c) == dst_of(&g) && dst_of(&c) == dst_of(&g2), 6)?;

    Ok([f, g, f2, g2, a, b, c])
}

fn object_names_by<'d, T, F: Fn(&'d ObjDecl) -> Option<T>>(
    doc: &'d DiagramDoc,
    build: F,
) -> Vec<(&'d str, T)> {
    doc.objects
        .iter()
        .filter_map(|(n, d)| build(d).map(|t| (n.as_str(), t)))
        .collect()
}

fn build_ptset(doc: &DiagramDoc) -> Result<LambekDiagram<Pt>, ParseError> {
    let mut objects: HashMap<String, PtObject> = HashMap::new();
    for (name, size) in object_names_by(doc, |d| match d {
        ObjDecl::PtSize(n) => Some(*n),
        _ => None,
    }) {
        let obj = PtObject::new(size).map_err(|e| ParseError::InvalidEntity {
            name: name.to_string(),
            msg: e.to_string(),
        })?;
        objects.insert(name.to_string(), obj);
    }

    let mut maps: HashMap<String, (PtMap, String, String)> = HashMap::new();
    for (name, m) in &doc.morphs {
        let src = objects.get(&m.src).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.src.clone(),
        })?;
        let dst = objects.get(&m.dst).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.dst.clone(),
        })?;
        let table: Result<Vec<usize>, ParseError> = m
            .rows
            .iter()
            .flatten()
            .map(|&x| {
                usize::try_from(x).map_err(|_| ParseError::InvalidEntity {
                    name: name.clone(),
                    msg: "element images must be nonnegative".into(),
                })
            })
            .collect();
        let map = PtMap::new(*src, *dst, table?).map_err(|e| ParseError::InvalidEntity {
            name: name.clone(),
            msg: e.to_string(),
        })?;
        maps.insert(name.clone(), (map, m.src.clone(), m.dst.clone()));
    }

    let seven = assemble(doc, &maps, |m| m.1.clone(), |m| m.2.clone())?;
    let [f, g, f2, g2, a, b, c] = seven.map(|m| m.0);
    diagram_from_parts::<Pt, _>(doc, f, g, f2, g2, a, b, c, |x, y| x.table() == y.table())
}

fn build_abgroup(doc: &DiagramDoc) -> Result<LambekDiagram<AbExact>, ParseError> {
    let mut objects: HashMap<String, AbObjectExact> = HashMap::new();
    for (name, (gens, rels)) in object_names_by(doc, |d| match d {
        ObjDecl::AbPres { gens, rels } => Some((*gens, rels.clone())),
        _ => None,
    }) {
        if !rels.is_empty() && rels.len() != gens {
            return Err(ParseError::InvalidEntity {
                name: name.to_string(),
                msg: format!("rels has {} rows for {} generators", rels.len(), gens),
            });
        }
        let cols = rels.first().map_or(0, |r| r.len());
        if rels.iter().any(|r| r.len() != cols) {
            return Err(ParseError::InvalidEntity {
                name: name.to_string(),
                msg: "ragged relation rows".into(),
            });
        }
        let mat = lambek_models::IMat::from_i64_rows(&if rels.is_empty() {
            vec![vec![]; gens]
        } else {
            rels
        });
        let obj = AbObjectExact::new(gens, mat).map_err(|e| ParseError::InvalidEntity {
            name: name.to_string(),
            msg: e.to_string(),
        })?;
        objects.insert(name.to_string(), obj);
    }

    let mut maps: HashMap<String, (AbMapExact, String, String)> = HashMap::new();
    for (name, m) in &doc.morphs {
        let src = objects.get(&m.src).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.src.clone(),
        })?;
        let dst = objects.get(&m.dst).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.dst.clone(),
        })?;
        // Shape check first, so the error message names the morphism.
        let want_rows = dst.rank();
        let want_cols = src.rank();
        let rows = if m.rows.is_empty() && want_rows > 0 {
            vec![vec![]; want_rows]
        } else {
            m.rows.clone()
        };
        if rows.len() != want_rows || rows.iter().any(|r| r.len() != want_cols) {
            return Err(ParseError::InvalidEntity {
                name: name.clone(),
                msg: format!("matrix must be {want_rows}x{want_cols} (dst.rank x src.rank)"),
            });
        }
        // Build with explicit dimensions: zero-row or zero-column matrices
        // carry no shape information of their own.
        let mat = lambek_models::IMat::from_fn(want_rows, want_cols, |i, j| {
            lambek_models::Scalar::from(rows[i][j])
        });
        let map = AbMapExact::new(src.clone(), dst.clone(), mat).map_err(|e| {
            ParseError::InvalidEntity {
                name: name.clone(),
                msg: e.to_string(),
            }
        })?;
        maps.insert(name.clone(), (map, m.src.clone(), m.dst.clone()));
    }

    let seven = assemble(doc, &maps, |m| m.1.clone(), |m| m.2.clone())?;
    let [f, g, f2, g2, a, b, c] = seven.map(|m| m.0);
    diagram_from_parts::<AbExact, _>(doc, f, g, f2, g2, a, b, c, |x, y| x.eq(y).unwrap_or(false))
}

fn build_grp(doc: &DiagramDoc) -> Result<LambekDiagram<Grp>, ParseError> {
    let mut objects: HashMap<String, lambek_models::CayleyGroup> = HashMap::new();
    for (name, decl) in &doc.objects {
        let group = match decl {
            ObjDecl::GrpNamed(g) => {
                lambek_models::builtin_group(g).map_err(|e| ParseError::InvalidEntity {
                    name: name.clone(),
                    msg: e.to_string(),
                })?
            }
            ObjDecl::GrpTable { order, rows } => {
                let flat: Vec<usize> = rows.iter().flatten().copied().collect();
                lambek_models::CayleyGroup::new(*order, flat).map_err(|e| {
                    ParseError::InvalidEntity {
                        name: name.clone(),
                        msg: e.to_string(),
                    }
                })?
            }
            _ => continue,
        };
        objects.insert(name.clone(), group);
    }

    let mut maps: HashMap<String, (GrpHom, String, String)> = HashMap::new();
    for (name, m) in &doc.morphs {
        let src = objects.get(&m.src).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.src.clone(),
        })?;
        let dst = objects.get(&m.dst).ok_or_else(|| ParseError::UnknownName {
            line: m.line,
            name: m.dst.clone(),
        })?;
        let table: Result<Vec<usize>, ParseError> = m
            .rows
            .iter()
            .flatten()
            .map(|&x| {
                usize::try_from(x).map_err(|_| ParseError::InvalidEntity {
                    name: name.clone(),
                    msg: "element images must be nonnegative".into(),
                })
            })
            .collect();
        let map = GrpHom::new(src.clone(), dst.clone(), table?).map_err(|e| {
            ParseError::InvalidEntity {
                name: name.clone(),
                msg: e.to_string(),
            }
        })?;
        maps.insert(name.clone(), (map, m.src.clone(), m.dst.clone()));
    }

    let seven = assemble(doc, &maps, |m| m.1.clone(), |m| m.2.clone())?;
    let [f, g, f2, g2, a, b, c] = seven.map(|m| m.0);
    diagram_from_parts::<Grp, _>(doc, f, g, f2, g2, a, b, c, |x, y| x.table() == y.table())
}

/// Commutativity with named squares, then the engine constructor.
#[allow(clippy::too_many_arguments)]
fn diagram_from_parts<M, FEq>(
    doc: &DiagramDoc,
    f: M::Map,
    g: M::Map,
    f2: M::Map,
    g2: M::Map,
    a: M::Map,
    b: M::Map,
    c: M::Map,
    eq: FEq,
) -> Result<LambekDiagram<M>, ParseError>
where
    M: lambek_category::Model,
    FEq: Fn(&M::Map, &M::Map) -> bool,
{
    use lambek_category::comp;
    if !eq(&comp::<M>(&b, &f), &comp::<M>(&f2, &a)) {
        return Err(ParseError::NonCommutingSquare { square: "S" });
    }
    if !eq(&comp::<M>(&c, &g), &comp::<M>(&g2, &b)) {
        return Err(ParseError::NonCommutingSquare { square: "T" });
    }
    LambekDiagram::new(f, g, f2, g2, a, b, c).map_err(|e| ParseError::InvalidEntity {
        name: doc.lambek.join(" "),
        msg: e.to_string(),
    })
}
