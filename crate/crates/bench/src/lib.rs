//! Instance builders shared by the benchmarks.

use tripack::generator::{generate, GenMode, GenSpec};
use tripack::koenig::BipartiteSubgraph;
use tripack::TripartiteGraph;

/// A seeded bilaterally complete instance (already apex-oriented, since
/// the generator puts the apex in part A).
pub fn bilateral_instance(
    p: usize,
    q: usize,
    r: usize,
    density: f64,
    seed: u64,
) -> TripartiteGraph {
    generate(&GenSpec {
        p,
        q,
        r,
        bc_density: density,
        mode: GenMode::BilaterallyComplete,
        seed,
    })
}

/// Complete bipartite graph K_{n,n} as a coloring input: n^2 edges of
/// maximum degree n, the dense extreme for the edge-coloring stage.
pub fn complete_bipartite(n: u32) -> BipartiteSubgraph {
    let pairs = (0..n).flat_map(|l| (0..n).map(move |r| (l, n + r)));
    BipartiteSubgraph::new(pairs).expect("K_{n,n} with disjoint sides is a valid input")
}
