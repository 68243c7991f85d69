//! Tripartite graph model: parts, sides, triangles, and the two
//! certificate predicates (transversal and packing).
//!
//! Vertices are plain integer ids; each id belongs to exactly one of the
//! three parts A, B, C. Edges live on one of the three sides AB, AC, BC and
//! every triangle uses one edge from each side.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::Error;

/// Vertex identifier, unique within a graph.
pub type VertexId = u32;

/// The three vertex parts of a tripartite graph.
///
/// By convention the solver orients graphs so that `A` is the apex: the part
/// whose two incident sides are complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    A,
    B,
    C,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::A, Part::B, Part::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Part::A => "A",
            Part::B => "B",
            Part::C => "C",
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The three edge sides of a tripartite graph, named by the parts they join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    AB,
    AC,
    BC,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::AB, Side::AC, Side::BC];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The two parts this side joins, in part order.
    pub fn parts(self) -> (Part, Part) {
        match self {
            Side::AB => (Part::A, Part::B),
            Side::AC => (Part::A, Part::C),
            Side::BC => (Part::B, Part::C),
        }
    }

    /// The side joining two distinct parts, in either order.
    pub fn between(x: Part, y: Part) -> Option<Side> {
        Side::ALL
            .into_iter()
            .find(|s| s.parts() == (x, y) || s.parts() == (y, x))
    }

    pub fn label(self) -> &'static str {
        match self {
            Side::AB => "AB",
            Side::AC => "AC",
            Side::BC => "BC",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Undirected edge; endpoints are stored in increasing id order so equal
/// edges compare equal regardless of construction order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the edge `{a, b}`. `a == b` is representable so that
    /// validation can report self-loops instead of panicking on them.
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn touches(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A triangle with one vertex in each part, stored in part order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
}

impl Triangle {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Triangle {
        Triangle { a, b, c }
    }

    /// The three edges of the triangle: AB, AC, BC in that order.
    pub fn edges(self) -> [Edge; 3] {
        [
            Edge::new(self.a, self.b),
            Edge::new(self.a, self.c),
            Edge::new(self.b, self.c),
        ]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}-{}", self.a, self.b, self.c)
    }
}

/// A set of edges meeting every triangle, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    edges: Vec<Edge>,
}

impl Transversal {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Transversal {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        edges.dedup();
        Transversal { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A set of pairwise edge-disjoint triangles, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    triangles: Vec<Triangle>,
}

impl Packing {
    pub fn new(triangles: impl IntoIterator<Item = Triangle>) -> Packing {
        let mut triangles: Vec<Triangle> = triangles.into_iter().collect();
        triangles.sort();
        triangles.dedup();
        Packing { triangles }
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// One structural problem found by [`TripartiteGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    /// A vertex id is listed in more than one part.
    VertexInMultipleParts(VertexId),
    /// An edge joins a vertex to itself.
    SelfLoop { side: Side, edge: Edge },
    /// An edge endpoint is not listed in any part.
    EndpointNotInParts {
        side: Side,
        edge: Edge,
        vertex: VertexId,
    },
    /// An edge's endpoints do not lie in the two parts of its side.
    EdgeOnWrongSide { side: Side, edge: Edge },
    /// The same edge is listed twice on one side.
    DuplicateEdge { side: Side, edge: Edge },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::VertexInMultipleParts(v) => {
                write!(f, "vertex {v} appears in more than one part")
            }
            ValidationIssue::SelfLoop { side, edge } => {
                write!(f, "self-loop {edge} on side {side}")
            }
            ValidationIssue::EndpointNotInParts { side, edge, vertex } => {
                write!(
                    f,
                    "edge {edge} on side {side} uses undeclared vertex {vertex}"
                )
            }
            ValidationIssue::EdgeOnWrongSide { side, edge } => {
                write!(f, "edge {edge} does not join the parts of side {side}")
            }
            ValidationIssue::DuplicateEdge { side, edge } => {
                write!(f, "edge {edge} listed twice on side {side}")
            }
        }
    }
}

/// Outcome of structural validation plus per-side completeness flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
    /// `side_complete[s.index()]` is true when side `s` carries every
    /// possible edge between its two parts. Only meaningful when `issues`
    /// is empty.
    pub side_complete: [bool; 3],
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// How to relabel the parts of a graph so the apex becomes part A.
///
/// `roles[i]` names the input part that takes over output role `i`
/// (0 → A, 1 → B, 2 → C). Applying the orientation never touches vertex
/// ids, only which bucket a vertex (and each edge list) sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    roles: [Part; 3],
}

impl Orientation {
    /// The input part that becomes the apex.
    pub fn apex(&self) -> Part {
        self.roles[0]
    }

    /// True when the graph is already apex-first (nothing to relabel).
    pub fn is_identity(&self) -> bool {
        self.roles == [Part::A, Part::B, Part::C]
    }

    /// Rebuilds `g` with parts and edge lists moved to their new roles.
    pub fn apply(&self, g: &TripartiteGraph) -> TripartiteGraph {
        let parts = [
            g.part(self.roles[0]).to_vec(),
            g.part(self.roles[1]).to_vec(),
            g.part(self.roles[2]).to_vec(),
        ];
        let mut edges: [Vec<(VertexId, VertexId)>; 3] = Default::default();
        for (new_side, (i, j)) in [(Side::AB, (0, 1)), (Side::AC, (0, 2)), (Side::BC, (1, 2))] {
            let old_side = Side::between(self.roles[i], self.roles[j])
                .expect("roles are a permutation of the three parts");
            edges[new_side.index()] = g
                .side_edges(old_side)
                .iter()
                .map(|e| e.endpoints())
                .collect();
        }
        let [e_ab, e_ac, e_bc] = edges;
        TripartiteGraph::new(
            parts[0].iter().copied(),
            parts[1].iter().copied(),
            parts[2].iter().copied(),
            e_ab,
            e_ac,
            e_bc,
        )
    }
}

/// A tripartite graph with explicit parts and per-side edge lists.
///
/// Parts are stored sorted and deduplicated; edge lists are stored sorted
/// but *not* deduplicated, so [`validate`](Self::validate) can report
/// duplicate edges instead of hiding them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteGraph {
    parts: [Vec<VertexId>; 3],
    edges: [Vec<Edge>; 3],
    membership: HashMap<VertexId, Part>,
}

impl TripartiteGraph {
    pub fn new(
        a: impl IntoIterator<Item = VertexId>,
        b: impl IntoIterator<Item = VertexId>,
        c: impl IntoIterator<Item = VertexId>,
        e_ab: impl IntoIterator<Item = (VertexId, VertexId)>,
        e_ac: impl IntoIterator<Item = (VertexId, VertexId)>,
        e_bc: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> TripartiteGraph {
        let mut parts = [
            a.into_iter().collect::<Vec<_>>(),
            b.into_iter().collect::<Vec<_>>(),
            c.into_iter().collect::<Vec<_>>(),
        ];
        for part in &mut parts {
            part.sort_unstable();
            part.dedup();
        }
        let mut membership = HashMap::new();
        for part in Part::ALL {
            for &v in &parts[part.index()] {
                // On overlap the first part wins; validate() reports it.
                membership.entry(v).or_insert(part);
            }
        }
        let mut edges = [
            e_ab.into_iter()
                .map(|(u, v)| Edge::new(u, v))
                .collect::<Vec<_>>(),
            e_ac.into_iter()
                .map(|(u, v)| Edge::new(u, v))
                .collect::<Vec<_>>(),
            e_bc.into_iter()
                .map(|(u, v)| Edge::new(u, v))
                .collect::<Vec<_>>(),
        ];
        for side in &mut edges {
            side.sort_unstable();
        }
        TripartiteGraph {
            parts,
            edges,
            membership,
        }
    }

    /// The vertices of one part, sorted ascending.
    pub fn part(&self, part: Part) -> &[VertexId] {
        &self.parts[part.index()]
    }

    /// Part sizes `(|A|, |B|, |C|)`.
    pub fn part_sizes(&self) -> (usize, usize, usize) {
        (
            self.parts[0].len(),
            self.parts[1].len(),
            self.parts[2].len(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// The edges of one side, sorted (possibly with duplicates if the
    /// graph is invalid).
    pub fn side_edges(&self, side: Side) -> &[Edge] {
        &self.edges[side.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// The part containing `v`, if any.
    pub fn part_of(&self, v: VertexId) -> Option<Part> {
        self.membership.get(&v).copied()
    }

    /// Position of `v` inside its sorted part.
    pub fn position_in_part(&self, v: VertexId) -> Option<(Part, usize)> {
        let part = self.part_of(v)?;
        let pos = self.parts[part.index()].binary_search(&v).ok()?;
        Some((part, pos))
    }

    /// True when the graph contains `e` on the side its endpoints dictate.
    pub fn has_edge(&self, e: Edge) -> bool {
        let (Some(pu), Some(pv)) = (self.part_of(e.u()), self.part_of(e.v())) else {
            return false;
        };
        if pu == pv {
            return false;
        }
        let side = Side::between(pu, pv).expect("distinct parts always share a side");
        self.edges[side.index()].binary_search(&e).is_ok()
    }

    /// True when a side carries all `|P|·|Q|` possible edges.
    pub fn is_side_complete(&self, side: Side) -> bool {
        let (x, y) = side.parts();
        let want = self.parts[x.index()].len() * self.parts[y.index()].len();
        let mut distinct = 0usize;
        let mut prev = None;
        for &e in &self.edges[side.index()] {
            if prev != Some(e) {
                distinct += 1;
                prev = Some(e);
            }
        }
        distinct == want
    }

    /// Edges of a side as `(x, y)` pairs oriented so `x` lies in the side's
    /// first part. Sorted by `(x, y)` and deduplicated.
    pub fn side_pairs(&self, side: Side) -> Vec<(VertexId, VertexId)> {
        let (first, _) = side.parts();
        let mut pairs: Vec<(VertexId, VertexId)> = self.edges[side.index()]
            .iter()
            .map(|e| {
                if self.part_of(e.u()) == Some(first) {
                    (e.u(), e.v())
                } else {
                    (e.v(), e.u())
                }
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// BC edges as `(b, c)` pairs; the orientation the network builder and
    /// the oracles work with.
    pub fn bc_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.side_pairs(Side::BC)
    }

    /// Checks the structural invariants and reports every finding.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();

        // Parts must be pairwise disjoint. Each part vector is already
        // deduplicated, so any overlap is across two different parts.
        let mut seen: HashMap<VertexId, Part> = HashMap::new();
        let mut reported: HashSet<VertexId> = HashSet::new();
        for part in Part::ALL {
            for &v in &self.parts[part.index()] {
                if let Some(&other) = seen.get(&v) {
                    if other != part && reported.insert(v) {
                        issues.push(ValidationIssue::VertexInMultipleParts(v));
                    }
                } else {
                    seen.insert(v, part);
                }
            }
        }

        for side in Side::ALL {
            let (x, y) = side.parts();
            let mut prev: Option<Edge> = None;
            for &e in &self.edges[side.index()] {
                if e.u() == e.v() {
                    issues.push(ValidationIssue::SelfLoop { side, edge: e });
                    prev = Some(e);
                    continue;
                }
                let mut endpoints_ok = true;
                for vertex in [e.u(), e.v()] {
                    if self.part_of(vertex).is_none() {
                        issues.push(ValidationIssue::EndpointNotInParts {
                            side,
                            edge: e,
                            vertex,
                        });
                        endpoints_ok = false;
                    }
                }
                if endpoints_ok {
                    let pu = self.part_of(e.u()).unwrap();
                    let pv = self.part_of(e.v()).unwrap();
                    if !((pu, pv) == (x, y) || (pu, pv) == (y, x)) {
                        issues.push(ValidationIssue::EdgeOnWrongSide { side, edge: e });
                    }
                }
                if prev == Some(e) {
                    issues.push(ValidationIssue::DuplicateEdge { side, edge: e });
                }
                prev = Some(e);
            }
        }

        let side_complete = [
            self.is_side_complete(Side::AB),
            self.is_side_complete(Side::AC),
            self.is_side_complete(Side::BC),
        ];
        ValidationReport {
            issues,
            side_complete,
        }
    }

    /// Finds the apex: a part whose two incident sides are both complete.
    ///
    /// Ties are broken toward the smallest part, then by part order, so the
    /// result is deterministic and applying it twice changes nothing.
    pub fn detect_orientation(&self) -> Result<Orientation, Error> {
        let complete = [
            self.is_side_complete(Side::AB),
            self.is_side_complete(Side::AC),
            self.is_side_complete(Side::BC),
        ];
        // Sides incident to each part, by side index.
        let incident = [(0usize, 1usize), (0, 2), (1, 2)];
        let mut best: Option<Part> = None;
        for part in Part::ALL {
            let (s1, s2) = incident[part.index()];
            if complete[s1] && complete[s2] {
                let better = match best {
                    None => true,
                    Some(cur) => self.part(part).len() < self.part(cur).len(),
                };
                if better {
                    best = Some(part);
                }
            }
        }
        let apex = best.ok_or(Error::NotBilaterallyComplete)?;
        let mut roles = [apex; 3];
        let mut slot = 1;
        for part in Part::ALL {
            if part != apex {
                roles[slot] = part;
                slot += 1;
            }
        }
        Ok(Orientation { roles })
    }

    /// All triangles, in lexicographic `(a, b, c)` order.
    ///
    /// Works on any valid tripartite graph: each candidate is checked
    /// against all three sides, so no completeness is assumed.
    pub fn triangles(&self) -> Vec<Triangle> {
        let ab: HashSet<Edge> = self.edges[Side::AB.index()].iter().copied().collect();
        let ac: HashSet<Edge> = self.edges[Side::AC.index()].iter().copied().collect();
        let bc = self.bc_pairs();
        let mut out = Vec::new();
        for &a in self.part(Part::A) {
            for &(b, c) in &bc {
                if ab.contains(&Edge::new(a, b)) && ac.contains(&Edge::new(a, c)) {
                    out.push(Triangle::new(a, b, c));
                }
            }
        }
        out
    }

    /// Does `edges` meet every triangle? Errors if any listed edge is not
    /// actually in the graph, so a bogus certificate cannot pass silently.
    pub fn is_transversal(&self, edges: &[Edge]) -> Result<bool, Error> {
        for &e in edges {
            if !self.has_edge(e) {
                return Err(Error::EdgeNotInGraph(e));
            }
        }
        let chosen: HashSet<Edge> = edges.iter().copied().collect();
        for t in self.triangles() {
            if !t.edges().iter().any(|e| chosen.contains(e)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Are `triangles` pairwise edge-disjoint triangles of this graph?
    /// Errors if any listed triangle is not actually in the graph.
    pub fn is_packing(&self, triangles: &[Triangle]) -> Result<bool, Error> {
        for &t in triangles {
            let roles_ok = self.part_of(t.a) == Some(Part::A)
                && self.part_of(t.b) == Some(Part::B)
                && self.part_of(t.c) == Some(Part::C);
            if !roles_ok || !t.edges().iter().all(|&e| self.has_edge(e)) {
                return Err(Error::TriangleNotInGraph(t));
            }
        }
        let mut used: HashSet<Edge> = HashSet::new();
        for &t in triangles {
            for e in t.edges() {
                if !used.insert(e) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
