//! The graph file format: a line-oriented, comment-friendly description
//! of a tripartite graph.
//!
//! ```text
//! # comments run to the end of the line
//! part A 0 1
//! part B 2 3 4 5
//! part C 6 7 8 9
//! side AB complete
//! side AC complete
//! edges BC 2-6 2-7 2-8 3-8 3-9 4-9 5-9
//! ```
//!
//! Each part may be declared at most once (its vertex list may be empty);
//! each side at most once, either `side XY complete` or `edges XY` with an
//! explicit list. Undeclared sides are empty. `complete` expands against
//! the final part contents, so declaration order never matters.
//!
//! Parsing distinguishes syntax errors (malformed tokens) from semantic
//! errors (well-formed files describing an invalid graph); both carry the
//! line and column they were found at.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use tripack::graph::{Edge, Part, Side, Triangle, TripartiteGraph, VertexId};

/// Whether the input was malformed or merely described an invalid graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 1-based line of the offending token.
    pub line: usize,
    /// 1-based column of the offending token.
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl Tok<'_> {
    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Syntax,
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn semantic(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Semantic,
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }
}

fn semantic_at(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Semantic,
        line,
        col,
        message: message.into(),
    }
}

/// Splits one line into whitespace-separated tokens, dropping `#` comments.
fn line_tokens(raw: &str, line_no: usize) -> Vec<Tok<'_>> {
    let body = &raw[..raw.find('#').unwrap_or(raw.len())];
    let mut toks = Vec::new();
    let mut start = None;
    for (i, ch) in body
        .char_indices()
        .chain(std::iter::once((body.len(), ' ')))
    {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                toks.push(Tok {
                    text: &body[s..i],
                    line: line_no,
                    col: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    toks
}

fn parse_part_name(tok: &Tok<'_>) -> Result<Part, ParseError> {
    match tok.text {
        "A" => Ok(Part::A),
        "B" => Ok(Part::B),
        "C" => Ok(Part::C),
        other => Err(tok.syntax(format!("unknown part name '{other}' (expected A, B, or C)"))),
    }
}

fn parse_side_name(tok: &Tok<'_>) -> Result<Side, ParseError> {
    match tok.text {
        "AB" => Ok(Side::AB),
        "AC" => Ok(Side::AC),
        "BC" => Ok(Side::BC),
        other => Err(tok.syntax(format!(
            "unknown side name '{other}' (expected AB, AC, or BC)"
        ))),
    }
}

fn parse_id(tok: &Tok<'_>) -> Result<VertexId, ParseError> {
    tok.text
        .parse()
        .map_err(|_| tok.syntax(format!("invalid vertex id '{}'", tok.text)))
}

enum SideDecl {
    Complete,
    /// Explicit pairs with the position of each edge token.
    Pairs(Vec<(VertexId, VertexId, usize, usize)>),
}

/// Parses a graph file into a [`TripartiteGraph`].
///
/// The returned graph always passes [`TripartiteGraph::validate`]: every
/// structural problem is reported here, with a position, instead.
pub fn parse_graph(text: &str) -> Result<TripartiteGraph, ParseError> {
    let mut part_decls: [Option<Vec<(VertexId, usize, usize)>>; 3] = Default::default();
    let mut side_decls: [Option<SideDecl>; 3] = Default::default();

    for (idx, raw) in text.lines().enumerate() {
        let toks = line_tokens(raw, idx + 1);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "part" => {
                let name = toks
                    .get(1)
                    .ok_or_else(|| head.syntax("'part' needs a part name (A, B, or C)"))?;
                let part = parse_part_name(name)?;
                if part_decls[part.index()].is_some() {
                    return Err(name.semantic(format!("part {part} declared twice")));
                }
                let mut ids = Vec::new();
                for t in &toks[2..] {
                    ids.push((parse_id(t)?, t.line, t.col));
                }
                part_decls[part.index()] = Some(ids);
            }
            "side" => {
                let name = toks
                    .get(1)
                    .ok_or_else(|| head.syntax("'side' needs a side name (AB, AC, or BC)"))?;
                let side = parse_side_name(name)?;
                let kw = toks
                    .get(2)
                    .ok_or_else(|| name.syntax("'side' needs the keyword 'complete'"))?;
                if kw.text != "complete" {
                    return Err(kw.syntax(format!("expected 'complete', found '{}'", kw.text)));
                }
                if let Some(extra) = toks.get(3) {
                    return Err(extra.syntax(format!("unexpected token '{}'", extra.text)));
                }
                if side_decls[side.index()].is_some() {
                    return Err(name.semantic(format!("side {side} declared twice")));
                }
                side_decls[side.index()] = Some(SideDecl::Complete);
            }
            "edges" => {
                let name = toks
                    .get(1)
                    .ok_or_else(|| head.syntax("'edges' needs a side name (AB, AC, or BC)"))?;
                let side = parse_side_name(name)?;
                if side_decls[side.index()].is_some() {
                    return Err(name.semantic(format!("side {side} declared twice")));
                }
                let mut pairs = Vec::new();
                for t in &toks[2..] {
                    let Some((us, vs)) = t.text.split_once('-') else {
                        return Err(t.syntax(format!("invalid edge '{}' (expected U-V)", t.text)));
                    };
                    let u = Tok { text: us, ..*t };
                    let v = Tok { text: vs, ..*t };
                    pairs.push((parse_id(&u)?, parse_id(&v)?, t.line, t.col));
                }
                side_decls[side.index()] = Some(SideDecl::Pairs(pairs));
            }
            other => {
                return Err(head.syntax(format!(
                    "unknown directive '{other}' (expected part, side, or edges)"
                )));
            }
        }
    }

    // Parts first: membership decides whether edge declarations make sense.
    let mut membership: HashMap<VertexId, Part> = HashMap::new();
    let mut parts: [Vec<VertexId>; 3] = Default::default();
    for part in Part::ALL {
        if let Some(ids) = &part_decls[part.index()] {
            for &(id, line, col) in ids {
                match membership.get(&id) {
                    Some(&other) if other != part => {
                        return Err(semantic_at(
                            line,
                            col,
                            format!("vertex {id} already declared in part {other}"),
                        ));
                    }
                    Some(_) => {} // repeated inside one part: harmless
                    None => {
                        membership.insert(id, part);
                        parts[part.index()].push(id);
                    }
                }
            }
        }
    }

    let mut side_edges: [Vec<(VertexId, VertexId)>; 3] = Default::default();
    for side in Side::ALL {
        let (x, y) = side.parts();
        match &side_decls[side.index()] {
            None => {}
            Some(SideDecl::Complete) => {
                side_edges[side.index()] = parts[x.index()]
                    .iter()
                    .flat_map(|&u| parts[y.index()].iter().map(move |&v| (u, v)))
                    .collect();
            }
            Some(SideDecl::Pairs(pairs)) => {
                let mut seen = HashSet::new();
                for &(u, v, line, col) in pairs {
                    if u == v {
                        return Err(semantic_at(line, col, format!("self-loop {u}-{v}")));
                    }
                    let pu = *membership.get(&u).ok_or_else(|| {
                        semantic_at(line, col, format!("vertex {u} not declared in any part"))
                    })?;
                    let pv = *membership.get(&v).ok_or_else(|| {
                        semantic_at(line, col, format!("vertex {v} not declared in any part"))
                    })?;
                    if !((pu, pv) == (x, y) || (pu, pv) == (y, x)) {
                        return Err(semantic_at(
                            line,
                            col,
                            format!("edge {u}-{v} does not join parts {x} and {y}"),
                        ));
                    }
                    if !seen.insert(Edge::new(u, v)) {
                        return Err(semantic_at(line, col, format!("duplicate edge {u}-{v}")));
                    }
                    side_edges[side.index()].push((u, v));
                }
            }
        }
    }

    let [pa, pb, pc] = parts;
    let [ab, ac, bc] = side_edges;
    let g = TripartiteGraph::new(pa, pb, pc, ab, ac, bc);
    debug_assert!(
        g.validate().is_valid(),
        "the parser catches every validation issue"
    );
    Ok(g)
}

/// Writes a graph in canonical form: parts in order, complete sides as
/// `side XY complete`, other non-empty sides as sorted explicit edge
/// lists with each edge oriented part-first.
///
/// Parsing the output reproduces the graph exactly.
pub fn serialize_graph(g: &TripartiteGraph) -> String {
    let mut out = String::new();
    for part in Part::ALL {
        write!(out, "part {part}").unwrap();
        for v in g.part(part) {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for side in Side::ALL {
        let pairs = g.side_pairs(side);
        if pairs.is_empty() {
            continue;
        }
        if g.is_side_complete(side) {
            writeln!(out, "side {side} complete").unwrap();
        } else {
            write!(out, "edges {side}").unwrap();
            for (u, v) in pairs {
                write!(out, " {u}-{v}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Parses a transversal file: whitespace-separated `U-V` edge tokens,
/// `#` comments allowed.
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>, ParseError> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        for t in line_tokens(raw, idx + 1) {
            let Some((us, vs)) = t.text.split_once('-') else {
                return Err(t.syntax(format!("invalid edge '{}' (expected U-V)", t.text)));
            };
            let u = parse_id(&Tok { text: us, ..t })?;
            let v = parse_id(&Tok { text: vs, ..t })?;
            edges.push(Edge::new(u, v));
        }
    }
    Ok(edges)
}

/// Parses a packing file: whitespace-separated `A-B-C` triangle tokens in
/// part order, `#` comments allowed.
pub fn parse_triangle_list(text: &str) -> Result<Vec<Triangle>, ParseError> {
    let mut triangles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        for t in line_tokens(raw, idx + 1) {
            let fields: Vec<&str> = t.text.split('-').collect();
            let &[a, b, c] = fields.as_slice() else {
                return Err(t.syntax(format!("invalid triangle '{}' (expected A-B-C)", t.text)));
            };
            triangles.push(Triangle::new(
                parse_id(&Tok { text: a, ..t })?,
                parse_id(&Tok { text: b, ..t })?,
                parse_id(&Tok { text: c, ..t })?,
            ));
        }
    }
    Ok(triangles)
}
