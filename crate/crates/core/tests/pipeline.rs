//! Property tests over seeded random instances: the solver agrees with
//! every exact baseline, and each pipeline stage keeps its invariants on
//! arbitrary generated inputs, not just the worked example.

mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use tripack::generator::{generate, GenMode, GenSpec};
use tripack::graph::{Edge, Part, Side, Transversal, TripartiteGraph};
use tripack::koenig::{edge_color, extract_subgraph, BipartiteSubgraph};
use tripack::menger::{
    is_separator, max_disjoint_paths, max_flow, min_separator, paths_from_flow, Separator,
};
use tripack::network::{build_network, NetNode, NetworkGraph};
use tripack::oracle::{
    brute_max_packing, brute_min_transversal, mao_cheng_min, uniform_transversal_min, OracleBudget,
};
use tripack::solver::{separator_to_transversal, solve};

const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Seeded bilaterally complete instances with bounded part sizes.
fn bilateral(max_p: usize, max_qr: usize) -> impl Strategy<Value = TripartiteGraph> {
    (
        0..=max_p,
        0..=max_qr,
        0..=max_qr,
        0..DENSITIES.len(),
        any::<u32>(),
    )
        .prop_map(move |(p, q, r, d, seed)| {
            generate(&GenSpec {
                p,
                q,
                r,
                bc_density: DENSITIES[d],
                mode: GenMode::BilaterallyComplete,
                seed: seed as u64,
            })
        })
}

/// Seeded general tripartite instances (all three sides sampled).
fn general(max_n: usize) -> impl Strategy<Value = TripartiteGraph> {
    (
        0..=max_n,
        0..=max_n,
        0..=max_n,
        0..DENSITIES.len(),
        0..DENSITIES.len(),
        0..DENSITIES.len(),
        any::<u32>(),
    )
        .prop_map(move |(p, q, r, da, db, dc, seed)| {
            generate(&GenSpec {
                p,
                q,
                r,
                bc_density: DENSITIES[dc],
                mode: GenMode::General {
                    ab_density: DENSITIES[da],
                    ac_density: DENSITIES[db],
                },
                seed: seed as u64,
            })
        })
}

/// Relabels parts A, B, C as C, B, A, moving the apex away from part A so
/// orientation detection has real work to do.
fn rotate_roles(g: &TripartiteGraph) -> TripartiteGraph {
    let pairs = |side: Side| {
        g.side_edges(side)
            .iter()
            .map(|e| e.endpoints())
            .collect::<Vec<_>>()
    };
    TripartiteGraph::new(
        g.part(Part::C).iter().copied(),
        g.part(Part::B).iter().copied(),
        g.part(Part::A).iter().copied(),
        pairs(Side::BC),
        pairs(Side::AC),
        pairs(Side::AB),
    )
}

/// Exhaustive minimum separator size, for networks small enough to try
/// every subset of internal nodes.
fn brute_min_separator_size(h: &NetworkGraph) -> usize {
    let n = h.internal_count();
    assert!(n <= 16, "exhaustive separator search needs a small network");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) >= best {
            continue;
        }
        let sep = Separator::from_nodes((0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 2));
        if is_separator(h, &sep) {
            best = sep.len();
        }
    }
    best
}

proptest! {
    /// The pipeline and all four oracles give the same optimum, and the
    /// certificates verify.
    #[test]
    fn solver_agrees_with_every_baseline(g in bilateral(3, 3)) {
        let budget = OracleBudget::default();
        let cert = solve(&g).unwrap();
        prop_assert!(cert.transversal_verified && cert.packing_verified && cert.sizes_equal);
        prop_assert_eq!(brute_max_packing(&g, &budget).unwrap().len(), cert.value);
        prop_assert_eq!(brute_min_transversal(&g, &budget).unwrap().len(), cert.value);
        prop_assert_eq!(uniform_transversal_min(&g, &budget).unwrap(), cert.value);
        prop_assert_eq!(mao_cheng_min(&g, &budget).unwrap(), cert.value);
    }

    /// Flow value, path family size, and separator size always coincide,
    /// the paths are internally disjoint, and the separator separates.
    #[test]
    fn flow_paths_and_separator_are_consistent(g in bilateral(3, 4)) {
        let h = build_network(&g);
        let flow = max_flow(&h);
        let paths = paths_from_flow(&h, &flow);
        let sep = min_separator(&h, &flow);
        prop_assert_eq!(paths.value(), flow.value());
        prop_assert_eq!(sep.len(), flow.value());
        prop_assert!(is_separator(&h, &sep));

        let mut used = HashSet::new();
        for path in paths.paths() {
            for &u in &path[1..4] {
                prop_assert!(used.insert(u), "internal node {} on two paths", u);
            }
        }
        prop_assert_eq!(max_disjoint_paths(&h), paths);
    }

    /// Every edge node is wired to all p copies on each side, so p² routes
    /// pass through it structurally.
    #[test]
    fn edge_nodes_touch_every_copy(g in bilateral(3, 4)) {
        let h = build_network(&g);
        let arcs = h.arcs();
        for u in 2..h.node_count() {
            if !matches!(h.node(u), NetNode::EdgeNode { .. }) {
                continue;
            }
            let fan_in = arcs.iter().enumerate()
                .filter(|(i, a)| i % 2 == 0 && a.to == NetworkGraph::split_in(u) && a.cap > 1)
                .count();
            let fan_out = arcs.iter().enumerate()
                .filter(|(i, a)| i % 2 == 0 && a.from == NetworkGraph::split_out(u) && a.cap > 1)
                .count();
            prop_assert_eq!(fan_in, h.p());
            prop_assert_eq!(fan_out, h.p());
        }
    }

    /// The separator-to-transversal map works for any separator, not just
    /// minimum ones: all edge nodes form a separator mapping to all BC
    /// edges.
    #[test]
    fn full_edge_node_separator_maps_to_all_bc_edges(g in bilateral(3, 4)) {
        let h = build_network(&g);
        let sep = Separator::from_nodes(
            (2..h.node_count()).filter(|&u| matches!(h.node(u), NetNode::EdgeNode { .. })),
        );
        prop_assert!(is_separator(&h, &sep));
        let t = separator_to_transversal(&sep, &h, &g).unwrap();
        let all_bc = Transversal::new(g.bc_pairs().into_iter().map(|(b, c)| Edge::new(b, c)));
        prop_assert_eq!(t, all_bc);
    }

    /// The subgraph extracted from a maximum path family has one BC edge
    /// per path and degree at most p, and colors into max-degree many
    /// matchings that exactly partition it.
    #[test]
    fn extracted_subgraph_colors_within_p(g in bilateral(3, 4)) {
        let h = build_network(&g);
        let paths = max_disjoint_paths(&h);
        let f = extract_subgraph(&paths, &h);
        prop_assert_eq!(f.edge_count(), paths.value());
        prop_assert!(f.max_degree() <= h.p());

        let coloring = edge_color(&f);
        prop_assert_eq!(coloring.class_count(), f.max_degree());
        let mut colored: Vec<Edge> = coloring.classes().iter().flatten().copied().collect();
        colored.sort_unstable();
        let mut expected: Vec<Edge> =
            f.pairs().iter().map(|&(l, r)| Edge::new(l, r)).collect();
        expected.sort_unstable();
        prop_assert_eq!(colored, expected);
        for class in coloring.classes() {
            let mut endpoints = HashSet::new();
            for e in class {
                prop_assert!(endpoints.insert(e.u()));
                prop_assert!(endpoints.insert(e.v()));
            }
        }
    }

    /// Edge coloring of arbitrary bipartite graphs uses exactly Δ classes.
    #[test]
    fn koenig_uses_exactly_delta_classes(
        nl in 1usize..=5,
        nr in 1usize..=5,
        bits in any::<u32>(),
    ) {
        let pairs: Vec<(u32, u32)> = (0..nl)
            .flat_map(|l| (0..nr).map(move |r| (l as u32, 100 + r as u32)))
            .enumerate()
            .filter(|(i, _)| bits & (1 << (i % 25)) != 0)
            .map(|(_, p)| p)
            .collect();
        let f = BipartiteSubgraph::new(pairs).unwrap();
        let coloring = edge_color(&f);
        prop_assert_eq!(coloring.class_count(), f.max_degree());
        prop_assert_eq!(coloring.edge_count(), f.edge_count());
    }

    /// Orientation detection is deterministic and idempotent, and solving
    /// a role-rotated instance gives the same optimum.
    #[test]
    fn orientation_is_stable_under_relabeling(g in bilateral(3, 3)) {
        let o = g.detect_orientation().unwrap();
        let og = o.apply(&g);
        prop_assert!(og.detect_orientation().unwrap().is_identity());
        prop_assert_eq!(o.apply(&g), og);

        let rotated = rotate_roles(&g);
        prop_assert!(rotated.validate().is_valid());
        let cert = solve(&g).unwrap();
        let cert_rot = solve(&rotated).unwrap();
        prop_assert_eq!(cert.value, cert_rot.value);
        prop_assert_eq!(
            rotated.is_transversal(cert_rot.transversal.edges()).unwrap(),
            true
        );
    }

    /// The two objectives sandwich each other on general tripartite
    /// graphs: ν ≤ τ ≤ 3ν.
    #[test]
    fn packing_and_transversal_sandwich_on_general_graphs(g in general(3)) {
        let budget = OracleBudget::default();
        let nu = brute_max_packing(&g, &budget).unwrap().len();
        let tau = brute_min_transversal(&g, &budget).unwrap().len();
        prop_assert!(nu <= tau);
        prop_assert!(tau <= 3 * nu || nu == 0 && tau == 0);
    }

    /// Identical generator specs reproduce identical instances.
    #[test]
    fn generator_is_deterministic(
        p in 0usize..=3,
        q in 0usize..=4,
        r in 0usize..=4,
        d in 0..DENSITIES.len(),
        seed in any::<u64>(),
    ) {
        let spec = GenSpec {
            p, q, r,
            bc_density: DENSITIES[d],
            mode: GenMode::BilaterallyComplete,
            seed,
        };
        let g1 = generate(&spec);
        let g2 = generate(&spec);
        prop_assert_eq!(&g1, &g2);
        prop_assert!(g1.side_edges(Side::BC).len() <= q * r);
        prop_assert!(g1.validate().is_valid());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// On networks small enough to try every node subset, the max-flow
    /// value equals the exhaustively verified minimum separator size.
    #[test]
    fn flow_value_matches_exhaustive_minimum_separator(g in bilateral(2, 2)) {
        let h = build_network(&g);
        prop_assert!(h.internal_count() <= 12);
        let flow = max_flow(&h);
        prop_assert_eq!(brute_min_separator_size(&h), flow.value());
    }
}

/// Deterministic spot-check at the edge of the default oracle budget:
/// q = r = 4 with a dense BC side stresses the subset minimization.
#[test]
fn all_baselines_agree_on_dense_budget_edge_instances() {
    let budget = OracleBudget {
        max_triangles: 48,
        max_bc_edges: 16,
        ..OracleBudget::default()
    };
    for seed in 0..5 {
        let g = generate(&GenSpec {
            p: 3,
            q: 4,
            r: 4,
            bc_density: 0.8,
            mode: GenMode::BilaterallyComplete,
            seed,
        });
        let cert = solve(&g).unwrap();
        assert_eq!(
            brute_max_packing(&g, &budget).unwrap().len(),
            cert.value,
            "seed {seed}"
        );
        assert_eq!(
            brute_min_transversal(&g, &budget).unwrap().len(),
            cert.value,
            "seed {seed}"
        );
        assert_eq!(
            uniform_transversal_min(&g, &budget),
            Ok(cert.value),
            "seed {seed}"
        );
        assert_eq!(mao_cheng_min(&g, &budget), Ok(cert.value), "seed {seed}");
    }
}

/// The complete-graph family has the closed-form optimum p·q when
/// p ≤ q ≤ r.
#[test]
fn complete_family_matches_closed_form() {
    for p in 1..=3u32 {
        for q in p..=3 {
            for r in q..=3 {
                let g = common::complete(p, q, r);
                let cert = solve(&g).unwrap();
                assert_eq!(cert.value, (p * q) as usize, "K_{{{p},{q},{r}}}");
            }
        }
    }
}
