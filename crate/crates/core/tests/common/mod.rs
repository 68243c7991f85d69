//! Instance builders shared by the integration tests.
//!
//! Each test binary compiles its own copy, so helpers one binary skips
//! would trip dead-code warnings without the allow.
#![allow(dead_code)]

use tripack::graph::{TripartiteGraph, VertexId};

/// The worked example from the crate docs: p = 2, q = r = 4, complete
/// AB/AC sides, seven BC edges, optimum 5 with a unique minimum
/// transversal.
pub fn figure_instance() -> TripartiteGraph {
    let a = [0, 1];
    let b = [2, 3, 4, 5];
    let c = [6, 7, 8, 9];
    let e_ab: Vec<_> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect();
    let e_ac: Vec<_> = a
        .iter()
        .flat_map(|&x| c.iter().map(move |&y| (x, y)))
        .collect();
    let e_bc = vec![(2, 6), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (5, 9)];
    TripartiteGraph::new(a, b, c, e_ab, e_ac, e_bc)
}

/// Complete tripartite graph K_{p,q,r} with consecutive ids.
pub fn complete(p: u32, q: u32, r: u32) -> TripartiteGraph {
    let a: Vec<VertexId> = (0..p).collect();
    let b: Vec<VertexId> = (p..p + q).collect();
    let c: Vec<VertexId> = (p + q..p + q + r).collect();
    let cross = |xs: &[VertexId], ys: &[VertexId]| -> Vec<(VertexId, VertexId)> {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .collect()
    };
    let (e_ab, e_ac, e_bc) = (cross(&a, &b), cross(&a, &c), cross(&b, &c));
    TripartiteGraph::new(a, b, c, e_ab, e_ac, e_bc)
}
