//! Constructive minimum edge coloring of bipartite graphs.
//!
//! A bipartite graph with maximum degree Δ splits into exactly Δ matchings.
//! The construction is incremental: insert edges in canonical order; when
//! an edge finds no color free at both endpoints, pick a color α free at
//! the left endpoint and β free at the right one, flip the α/β alternating
//! path starting at the right endpoint, and α becomes free at both.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::{Edge, VertexId};
use crate::menger::PathSet;
use crate::network::{NetNode, NetworkGraph};

/// A bipartite graph with explicit sides, ready for edge coloring.
///
/// Construction validates the two bipartition invariants — disjoint sides
/// and no repeated edge — so coloring itself cannot fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSubgraph {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    pairs: Vec<(VertexId, VertexId)>,
}

impl BipartiteSubgraph {
    /// Builds the subgraph from `(left, right)` endpoint pairs. The two
    /// sides are derived from the pairs themselves.
    pub fn new(
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<BipartiteSubgraph, Error> {
        let mut pairs: Vec<(VertexId, VertexId)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for window in pairs.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateEdge(Edge::new(window[0].0, window[0].1)));
            }
        }
        let mut left: Vec<VertexId> = pairs.iter().map(|&(l, _)| l).collect();
        let mut right: Vec<VertexId> = pairs.iter().map(|&(_, r)| r).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let right_set: HashSet<VertexId> = right.iter().copied().collect();
        if let Some(&v) = left.iter().find(|v| right_set.contains(v)) {
            return Err(Error::VertexOnBothSides(v));
        }
        Ok(BipartiteSubgraph { left, right, pairs })
    }

    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    /// Edges as `(left, right)` pairs in canonical (sorted) order.
    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        let mut left_deg = vec![0usize; self.left.len()];
        let mut right_deg = vec![0usize; self.right.len()];
        for &(l, r) in &self.pairs {
            left_deg[self.left.binary_search(&l).unwrap()] += 1;
            right_deg[self.right.binary_search(&r).unwrap()] += 1;
        }
        left_deg
            .iter()
            .chain(right_deg.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// A partition of a bipartite graph's edges into matchings.
///
/// Classes are canonically ordered: larger classes first, ties broken by
/// their smallest edge; edges inside a class are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    classes: Vec<Vec<Edge>>,
}

impl EdgeColoring {
    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Pulls the bipartite subgraph F out of a maximum path family: one
/// `(b, c)` edge per traversed edge node.
///
/// The paths must come from `h`; the node descriptors say which BC edge
/// each path crossed. Disjoint paths cross distinct edge nodes and the two
/// banks of a valid graph share no vertex ids, so construction succeeds.
pub fn extract_subgraph(paths: &PathSet, h: &NetworkGraph) -> BipartiteSubgraph {
    let pairs = paths.paths().iter().map(|path| match h.node(path[2]) {
        NetNode::EdgeNode { b, c } => (*b, *c),
        other => panic!("path middle node must be an edge node, found {other:?}"),
    });
    BipartiteSubgraph::new(pairs)
        .expect("disjoint paths yield distinct BC edges over disjoint banks")
}

/// Colors the edges of `f` with exactly `max_degree(f)` matchings.
pub fn edge_color(f: &BipartiteSubgraph) -> EdgeColoring {
    let delta = f.max_degree();
    if delta == 0 {
        return EdgeColoring {
            classes: Vec::new(),
        };
    }
    let lpos = |v: VertexId| {
        f.left
            .binary_search(&v)
            .expect("endpoint is on the left side")
    };
    let rpos = |v: VertexId| {
        f.right
            .binary_search(&v)
            .expect("endpoint is on the right side")
    };

    // slot[vertex][color] holds the index of the edge colored `color` at
    // that vertex; None means the color is free there.
    let mut left_slot = vec![vec![None::<usize>; delta]; f.left.len()];
    let mut right_slot = vec![vec![None::<usize>; delta]; f.right.len()];
    let mut color = vec![usize::MAX; f.pairs.len()];

    for (idx, &(l, r)) in f.pairs.iter().enumerate() {
        let (li, ri) = (lpos(l), rpos(r));
        if let Some(c) =
            (0..delta).find(|&c| left_slot[li][c].is_none() && right_slot[ri][c].is_none())
        {
            color[idx] = c;
            left_slot[li][c] = Some(idx);
            right_slot[ri][c] = Some(idx);
            continue;
        }
        // No shared free color. Both endpoints still have fewer than delta
        // incident edges, so each has some free color of its own.
        let alpha = (0..delta)
            .find(|&c| left_slot[li][c].is_none())
            .expect("degree so far is below delta");
        let beta = (0..delta)
            .find(|&c| right_slot[ri][c].is_none())
            .expect("degree so far is below delta");

        // Walk the alternating path from the right endpoint: its α-edge,
        // then that edge's other end's β-edge, and so on. The path can
        // never reach the left endpoint `l` — it would have to arrive via
        // an α-edge, and α is free at `l` — so flipping it is safe.
        let mut trail = Vec::new();
        let mut on_left = false;
        let mut pos = ri;
        let mut want = alpha;
        loop {
            let slot = if on_left {
                &left_slot[pos][want]
            } else {
                &right_slot[pos][want]
            };
            let Some(e) = *slot else { break };
            trail.push(e);
            let (el, er) = f.pairs[e];
            pos = if on_left { rpos(er) } else { lpos(el) };
            on_left = !on_left;
            want = alpha + beta - want;
        }
        // Flip α and β along the trail: clear every slot first so interior
        // vertices (which hold both colors) are not clobbered mid-update.
        for &e in &trail {
            let (el, er) = f.pairs[e];
            left_slot[lpos(el)][color[e]] = None;
            right_slot[rpos(er)][color[e]] = None;
        }
        for &e in &trail {
            let c = alpha + beta - color[e];
            color[e] = c;
            let (el, er) = f.pairs[e];
            left_slot[lpos(el)][c] = Some(e);
            right_slot[rpos(er)][c] = Some(e);
        }
        color[idx] = alpha;
        left_slot[li][alpha] = Some(idx);
        right_slot[ri][alpha] = Some(idx);
    }

    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); delta];
    for (idx, &(l, r)) in f.pairs.iter().enumerate() {
        classes[color[idx]].push(Edge::new(l, r));
    }
    debug_assert!(
        classes.iter().all(|class| !class.is_empty()),
        "every color below delta is used at a maximum-degree vertex"
    );
    classes.retain(|class| !class.is_empty());
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_by(|x, y| y.len().cmp(&x.len()).then(x[0].cmp(&y[0])));
    EdgeColoring { classes }
}
