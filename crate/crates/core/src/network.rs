//! Directed s–t network built from the sparse side of an apex-oriented
//! graph.
//!
//! For an oriented graph with apex A of size `p`, the network holds `p`
//! copies of every B vertex, one node per BC edge, and `p` copies of every
//! C vertex. The source feeds all B copies, each B copy of `u` feeds the
//! node of every BC edge at `u`, each edge node feeds all copies of its C
//! endpoint, and all C copies drain into the sink.
//!
//! Internally disjoint path counting is reduced to arc capacities by
//! splitting every internal node into an in-half and an out-half joined by
//! a unit-capacity arc; all structural arcs get a capacity no minimum cut
//! can afford, so cuts consist of split arcs only.

use crate::graph::{Part, TripartiteGraph, VertexId};

/// Split id of the source. The source and sink are never split, so their
/// split ids and unsplit ids coincide.
pub const SOURCE: usize = 0;
/// Split id of the sink.
pub const SINK: usize = 1;

/// One node of the network, before splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetNode {
    Source,
    Sink,
    /// Copy `copy` (1-based, `1..=p`) of B vertex `vertex`.
    BCopy {
        copy: usize,
        vertex: VertexId,
    },
    /// The node standing for BC edge `b`–`c`.
    EdgeNode {
        b: VertexId,
        c: VertexId,
    },
    /// Copy `copy` (1-based) of C vertex `vertex`.
    CCopy {
        copy: usize,
        vertex: VertexId,
    },
}

impl NetNode {
    pub fn is_internal(&self) -> bool {
        !matches!(self, NetNode::Source | NetNode::Sink)
    }

    /// Compact label without spaces, used by the arc export.
    pub fn label(&self) -> String {
        match self {
            NetNode::Source => "s".to_string(),
            NetNode::Sink => "t".to_string(),
            NetNode::BCopy { copy, vertex } => format!("B{copy}({vertex})"),
            NetNode::EdgeNode { b, c } => format!("E({b}-{c})"),
            NetNode::CCopy { copy, vertex } => format!("C{copy}({vertex})"),
        }
    }
}

/// A directed arc between split node ids. Arcs come in pairs: the forward
/// arc at an even index, its zero-capacity reverse at the index above it.
#[derive(Clone, Copy, Debug)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub cap: u32,
}

/// The split network: node descriptors by unsplit id, arcs by index, and
/// adjacency lists over split ids.
#[derive(Clone, Debug)]
pub struct NetworkGraph {
    nodes: Vec<NetNode>,
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    p: usize,
    edge_nodes: usize,
}

impl NetworkGraph {
    /// Number of unsplit nodes, source and sink included.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Number of nodes after splitting: source, sink, and two halves per
    /// internal node.
    pub fn split_node_count(&self) -> usize {
        2 + 2 * self.internal_count()
    }

    /// Descriptor of the unsplit node `u`.
    pub fn node(&self, u: usize) -> &NetNode {
        &self.nodes[u]
    }

    pub fn nodes(&self) -> &[NetNode] {
        &self.nodes
    }

    /// Apex size the network was built for.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of BC edge nodes.
    pub fn edge_node_count(&self) -> usize {
        self.edge_nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arc indices leaving split node `u` (forward and reverse arcs alike).
    pub fn adjacency(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Split id of the in-half of unsplit node `u`.
    pub fn split_in(u: usize) -> usize {
        if u < 2 {
            u
        } else {
            2 * u - 2
        }
    }

    /// Split id of the out-half of unsplit node `u`.
    pub fn split_out(u: usize) -> usize {
        if u < 2 {
            u
        } else {
            2 * u - 1
        }
    }

    /// Unsplit id owning a split id.
    pub fn unsplit(split: usize) -> usize {
        if split < 2 {
            split
        } else {
            split / 2 + 1
        }
    }

    /// Linear scan for a node descriptor; handy in tests and diagnostics.
    pub fn find_node(&self, needle: &NetNode) -> Option<usize> {
        self.nodes.iter().position(|n| n == needle)
    }

    /// Label of a split node, marking which half it is.
    pub fn split_label(&self, split: usize) -> String {
        let u = Self::unsplit(split);
        if split < 2 {
            self.nodes[u].label()
        } else if split.is_multiple_of(2) {
            format!("{}:in", self.nodes[u].label())
        } else {
            format!("{}:out", self.nodes[u].label())
        }
    }

    /// All forward arcs as `tail head capacity` lines, one per arc, in
    /// construction order.
    pub fn export_arcs(&self) -> String {
        let mut out = String::new();
        for (i, arc) in self.arcs.iter().enumerate() {
            if i % 2 == 0 {
                out.push_str(&format!(
                    "{} {} {}\n",
                    self.split_label(arc.from),
                    self.split_label(arc.to),
                    arc.cap
                ));
            }
        }
        out
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let idx = self.arcs.len();
        self.arcs.push(Arc { from, to, cap });
        self.arcs.push(Arc {
            from: to,
            to: from,
            cap: 0,
        });
        self.adj[from].push(idx);
        self.adj[to].push(idx + 1);
    }
}

/// Builds the network for an apex-oriented graph (apex must already be
/// part A; run [`TripartiteGraph::detect_orientation`] first if needed).
///
/// Only `|A|` and the BC edge list matter here: complete AB/AC sides add
/// no information, and isolated B or C vertices contribute copies that no
/// flow ever crosses. Node numbering is deterministic: source, sink, all
/// B copies (copy index, then vertex id), edge nodes (sorted by `(b, c)`),
/// then all C copies (copy index, then vertex id).
pub fn build_network(g: &TripartiteGraph) -> NetworkGraph {
    let p = g.part(Part::A).len();
    let b_vertices = g.part(Part::B);
    let c_vertices = g.part(Part::C);
    let pairs = g.bc_pairs();
    let q = b_vertices.len();
    let r = c_vertices.len();
    let m = pairs.len();

    let mut nodes = vec![NetNode::Source, NetNode::Sink];
    for copy in 1..=p {
        for &vertex in b_vertices {
            nodes.push(NetNode::BCopy { copy, vertex });
        }
    }
    for &(b, c) in &pairs {
        nodes.push(NetNode::EdgeNode { b, c });
    }
    for copy in 1..=p {
        for &vertex in c_vertices {
            nodes.push(NetNode::CCopy { copy, vertex });
        }
    }

    let b_copy_id = |copy: usize, b_pos: usize| 2 + (copy - 1) * q + b_pos;
    let edge_id = |k: usize| 2 + p * q + k;
    let c_copy_id = |copy: usize, c_pos: usize| 2 + p * q + m + (copy - 1) * r + c_pos;

    let internal = nodes.len() - 2;
    let mut h = NetworkGraph {
        nodes,
        arcs: Vec::new(),
        adj: vec![Vec::new(); 2 + 2 * internal],
        p,
        edge_nodes: m,
    };

    // Any capacity strictly above the largest possible flow works as
    // "unbounded"; p·m + 1 does, since every s-t path crosses an edge node.
    let big = (p * m + 1) as u32;

    // Unit split arc per internal node: this is what a cut can sever.
    for u in 2..h.node_count() {
        h.add_arc(NetworkGraph::split_in(u), NetworkGraph::split_out(u), 1);
    }
    // Source to every B copy.
    for copy in 1..=p {
        for b_pos in 0..q {
            h.add_arc(SOURCE, NetworkGraph::split_in(b_copy_id(copy, b_pos)), big);
        }
    }
    // Every copy of b to the node of each BC edge at b.
    for (k, &(b, _)) in pairs.iter().enumerate() {
        let b_pos = b_vertices
            .binary_search(&b)
            .expect("BC endpoint is in part B");
        for copy in 1..=p {
            h.add_arc(
                NetworkGraph::split_out(b_copy_id(copy, b_pos)),
                NetworkGraph::split_in(edge_id(k)),
                big,
            );
        }
    }
    // Each edge node to every copy of its C endpoint.
    for (k, &(_, c)) in pairs.iter().enumerate() {
        let c_pos = c_vertices
            .binary_search(&c)
            .expect("BC endpoint is in part C");
        for copy in 1..=p {
            h.add_arc(
                NetworkGraph::split_out(edge_id(k)),
                NetworkGraph::split_in(c_copy_id(copy, c_pos)),
                big,
            );
        }
    }
    // Every C copy to the sink.
    for copy in 1..=p {
        for c_pos in 0..r {
            h.add_arc(NetworkGraph::split_out(c_copy_id(copy, c_pos)), SINK, big);
        }
    }
    h
}
