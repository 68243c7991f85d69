//! Seeded instance generation with a fixed, portable random number
//! generator, so the same specification reproduces the same graph on any
//! platform — and in any other implementation of the same scheme.

use crate::graph::{TripartiteGraph, VertexId};

/// SplitMix64 (Steele, Lea & Flood). One draw advances the state by the
/// golden-ratio increment and mixes it with two xor-shift multiplies:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// return z ^ (z >> 31)
/// ```
///
/// Chosen for its two-line portability and published reference outputs;
/// seed 0 is a perfectly usable seed (there are no weak states).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, 1)`: the top 53 bits of the next output.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Which sides are sampled and which are complete.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenMode {
    /// Complete AB and AC sides; only BC is sampled. The generated graph
    /// is bilaterally complete by construction.
    BilaterallyComplete,
    /// All three sides complete; no randomness is consumed.
    Complete,
    /// All three sides sampled independently; the result is usually not
    /// bilaterally complete, which is the point (oracle-only instances).
    General { ab_density: f64, ac_density: f64 },
}

/// Everything that determines a generated instance. Equal specs generate
/// equal graphs, always.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// Probability that a given BC pair becomes an edge (ignored by
    /// [`GenMode::Complete`]).
    pub bc_density: f64,
    pub mode: GenMode,
    pub seed: u64,
}

/// Generates the instance described by `spec`.
///
/// Vertex ids are consecutive: `A = 0..p`, `B = p..p+q`, `C = p+q..p+q+r`.
/// Sampled sides draw one `next_f64` per candidate pair, pairs in
/// row-major order (first endpoint ascending, then second), sides in the
/// order AB, AC, BC; a pair becomes an edge when its draw is strictly
/// below the density. Complete sides consume no draws.
pub fn generate(spec: &GenSpec) -> TripartiteGraph {
    let a: Vec<VertexId> = (0..spec.p as VertexId).collect();
    let b: Vec<VertexId> = (spec.p as VertexId..(spec.p + spec.q) as VertexId).collect();
    let c: Vec<VertexId> =
        ((spec.p + spec.q) as VertexId..(spec.p + spec.q + spec.r) as VertexId).collect();

    let cross = |xs: &[VertexId], ys: &[VertexId]| -> Vec<(VertexId, VertexId)> {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .collect()
    };
    let mut rng = SplitMix64::new(spec.seed);
    let mut sample = |xs: &[VertexId], ys: &[VertexId], density: f64| {
        let mut edges = Vec::new();
        for &x in xs {
            for &y in ys {
                if rng.next_f64() < density {
                    edges.push((x, y));
                }
            }
        }
        edges
    };

    let (e_ab, e_ac, e_bc) = match spec.mode {
        GenMode::BilaterallyComplete => (
            cross(&a, &b),
            cross(&a, &c),
            sample(&b, &c, spec.bc_density),
        ),
        GenMode::Complete => (cross(&a, &b), cross(&a, &c), cross(&b, &c)),
        GenMode::General {
            ab_density,
            ac_density,
        } => {
            let e_ab = sample(&a, &b, ab_density);
            let e_ac = sample(&a, &c, ac_density);
            let e_bc = sample(&b, &c, spec.bc_density);
            (e_ab, e_ac, e_bc)
        }
    };
    TripartiteGraph::new(a, b, c, e_ab, e_ac, e_bc)
}
