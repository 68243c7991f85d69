//! Minimum triangle transversals and maximum triangle packings for
//! tripartite graphs whose two "apex" sides are complete.
//!
//! In a tripartite graph with parts A, B, C, call A the *apex* when every
//! A–B and every A–C edge is present; such graphs are *bilaterally
//! complete*, and on them the minimum number of edges meeting all
//! triangles equals the maximum number of pairwise edge-disjoint
//! triangles. This crate computes both certificates constructively:
//!
//! 1. [`network`] builds a directed source–sink network from the sparse
//!    B–C side, with one copy of each bank vertex per apex vertex and one
//!    node per B–C edge;
//! 2. [`menger`] finds a maximum family of internally disjoint paths and
//!    the matching minimum separator by unit-capacity max flow;
//! 3. [`solver`] translates the separator into a triangle transversal;
//! 4. [`koenig`] splits the B–C edges used by the paths into matchings,
//!    which [`solver`] joins to apex vertices to form the packing.
//!
//! [`oracle`] provides small-instance exact baselines (and two independent
//! closed-form minimizations) to cross-check the pipeline, and
//! [`generator`] produces seeded, reproducible test instances.
//!
//! ```
//! use tripack::{generator, solver};
//!
//! let spec = generator::GenSpec {
//!     p: 2,
//!     q: 4,
//!     r: 4,
//!     bc_density: 0.5,
//!     mode: generator::GenMode::BilaterallyComplete,
//!     seed: 7,
//! };
//! let g = generator::generate(&spec);
//! let cert = solver::solve(&g).unwrap();
//! assert_eq!(cert.transversal.len(), cert.packing.len());
//! ```

pub mod error;
pub mod generator;
pub mod graph;
pub mod koenig;
pub mod menger;
pub mod network;
pub mod oracle;
pub mod solver;

pub use error::Error;
pub use graph::{
    Edge, Orientation, Packing, Part, Side, Transversal, Triangle, TripartiteGraph,
    ValidationIssue, ValidationReport, VertexId,
};
pub use koenig::{BipartiteSubgraph, EdgeColoring};
pub use menger::{FlowState, PathSet, Separator};
pub use network::{NetNode, NetworkGraph};
pub use oracle::OracleBudget;
pub use solver::Certificate;
