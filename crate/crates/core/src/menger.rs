//! Maximum sets of internally disjoint s–t paths and matching minimum
//! separators on the split network.
//!
//! Unit split arcs make vertex-disjointness an arc-capacity question, so a
//! plain shortest-augmenting-path max flow suffices: every augmentation
//! adds one path, and capacities stay tiny. The minimum separator falls
//! out of the final residual graph: exactly the internal nodes whose
//! in-half is reachable from the source while their out-half is not.

use std::collections::VecDeque;

use crate::network::{Arc, NetNode, NetworkGraph, SINK, SOURCE};

/// A feasible flow on the network. `flow[i]` is the flow on arc `i`;
/// reverse arcs carry the negation of their partner.
#[derive(Clone, Debug)]
pub struct FlowState {
    flow: Vec<i32>,
    value: usize,
}

impl FlowState {
    /// Total s–t flow, which equals the number of disjoint paths.
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn arc_flow(&self, idx: usize) -> i32 {
        self.flow[idx]
    }

    fn residual(&self, arcs: &[Arc], idx: usize) -> i32 {
        arcs[idx].cap as i32 - self.flow[idx]
    }
}

/// A maximum family of internally disjoint s–t paths.
///
/// Every path has the same shape — source, B copy, edge node, C copy,
/// sink — stored as unsplit node ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSet {
    paths: Vec<[usize; 5]>,
}

impl PathSet {
    pub fn paths(&self) -> &[[usize; 5]] {
        &self.paths
    }

    pub fn value(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// A set of internal nodes whose removal disconnects source from sink,
/// stored as sorted unsplit ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    nodes: Vec<usize>,
}

impl Separator {
    /// Builds a separator candidate from unsplit internal node ids.
    /// Source and sink ids are rejected by debug assertion: a separator
    /// consists of internal nodes only.
    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> Separator {
        let mut nodes: Vec<usize> = nodes.into_iter().collect();
        debug_assert!(
            nodes.iter().all(|&u| u >= 2),
            "separators contain internal nodes only"
        );
        nodes.sort_unstable();
        nodes.dedup();
        Separator { nodes }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.nodes.binary_search(&u).is_ok()
    }
}

/// Runs breadth-first augmentation to a maximum flow.
pub fn max_flow(h: &NetworkGraph) -> FlowState {
    let n = h.split_node_count();
    let arcs = h.arcs();
    let mut state = FlowState {
        flow: vec![0; arcs.len()],
        value: 0,
    };
    loop {
        // Shortest augmenting path by arc count.
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut queue = VecDeque::new();
        queue.push_back(SOURCE);
        'bfs: while let Some(u) = queue.pop_front() {
            for &idx in h.adjacency(u) {
                let arc = &arcs[idx];
                if arc.from != u || state.residual(arcs, idx) <= 0 {
                    continue;
                }
                if arc.to != SOURCE && pred[arc.to].is_none() {
                    pred[arc.to] = Some(idx);
                    if arc.to == SINK {
                        break 'bfs;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        let Some(_) = pred[SINK] else { break };

        let mut bottleneck = i32::MAX;
        let mut u = SINK;
        while u != SOURCE {
            let idx = pred[u].expect("path reaches back to the source");
            bottleneck = bottleneck.min(state.residual(arcs, idx));
            u = arcs[idx].from;
        }
        let mut u = SINK;
        while u != SOURCE {
            let idx = pred[u].expect("path reaches back to the source");
            state.flow[idx] += bottleneck;
            state.flow[idx ^ 1] -= bottleneck;
            u = arcs[idx].from;
        }
        state.value += bottleneck as usize;
    }
    state
}

/// Decomposes a maximum flow into one path per unit, by walking positive
/// flow forward from the source and consuming it.
///
/// Unit split arcs keep the flow on every internal node at most one, so
/// the walk never branches and always lands on the sink after exactly a
/// B copy, an edge node, and a C copy.
pub fn paths_from_flow(h: &NetworkGraph, state: &FlowState) -> PathSet {
    let arcs = h.arcs();
    let mut flow = state.flow.clone();
    let mut paths = Vec::with_capacity(state.value());
    for &start in h.adjacency(SOURCE) {
        if arcs[start].from != SOURCE {
            continue;
        }
        while flow[start] > 0 {
            flow[start] -= 1;
            let mut path = [SOURCE; 5];
            let mut len = 1;
            let mut at = arcs[start].to;
            loop {
                // Record each internal node once, on its in-half.
                if at >= 2 && at.is_multiple_of(2) {
                    path[len] = NetworkGraph::unsplit(at);
                    len += 1;
                }
                if at == SINK {
                    break;
                }
                let next = h
                    .adjacency(at)
                    .iter()
                    .copied()
                    .find(|&idx| arcs[idx].from == at && flow[idx] > 0)
                    .expect("flow conservation: positive inflow implies positive outflow");
                flow[next] -= 1;
                at = arcs[next].to;
            }
            // `at == SINK`: record it and check the fixed shape.
            path[4] = SINK;
            assert_eq!(
                len, 4,
                "every unit of flow crosses exactly three internal nodes"
            );
            debug_assert!(matches!(h.node(path[1]), NetNode::BCopy { .. }));
            debug_assert!(matches!(h.node(path[2]), NetNode::EdgeNode { .. }));
            debug_assert!(matches!(h.node(path[3]), NetNode::CCopy { .. }));
            paths.push(path);
        }
    }
    paths.sort_unstable();
    PathSet { paths }
}

/// Convenience wrapper: maximum flow, then decomposition.
pub fn max_disjoint_paths(h: &NetworkGraph) -> PathSet {
    let state = max_flow(h);
    paths_from_flow(h, &state)
}

/// Reads the minimum separator off a maximum flow's residual graph.
///
/// Let R be the set of split nodes reachable from the source through
/// positive-residual arcs. Structural arcs are too expensive to cross the
/// cut, so the cut consists of split arcs whose in-half lies in R and
/// whose out-half does not — one internal node each, and by max-flow
/// min-cut there are exactly `state.value()` of them.
pub fn min_separator(h: &NetworkGraph, state: &FlowState) -> Separator {
    let arcs = h.arcs();
    let mut reachable = vec![false; h.split_node_count()];
    reachable[SOURCE] = true;
    let mut queue = VecDeque::from([SOURCE]);
    while let Some(u) = queue.pop_front() {
        for &idx in h.adjacency(u) {
            let arc = &arcs[idx];
            if arc.from == u && state.residual(arcs, idx) > 0 && !reachable[arc.to] {
                reachable[arc.to] = true;
                queue.push_back(arc.to);
            }
        }
    }
    debug_assert!(!reachable[SINK], "flow must be maximum before cutting");
    let nodes: Vec<usize> = (2..h.node_count())
        .filter(|&u| reachable[NetworkGraph::split_in(u)] && !reachable[NetworkGraph::split_out(u)])
        .collect();
    debug_assert_eq!(nodes.len(), state.value(), "cut size must match flow value");
    Separator { nodes }
}

/// Checks by breadth-first search that removing the separator's nodes
/// leaves no s–t path.
pub fn is_separator(h: &NetworkGraph, sep: &Separator) -> bool {
    let arcs = h.arcs();
    let removed = |split: usize| split >= 2 && sep.contains(NetworkGraph::unsplit(split));
    let mut reachable = vec![false; h.split_node_count()];
    reachable[SOURCE] = true;
    let mut queue = VecDeque::from([SOURCE]);
    while let Some(u) = queue.pop_front() {
        for &idx in h.adjacency(u) {
            let arc = &arcs[idx];
            if arc.from != u || arc.cap == 0 {
                continue; // follow real arcs only, not residual reverses
            }
            if removed(arc.to) || reachable[arc.to] {
                continue;
            }
            reachable[arc.to] = true;
            if arc.to == SINK {
                return false;
            }
            queue.push_back(arc.to);
        }
    }
    !reachable[SINK]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TripartiteGraph;
    use crate::network::build_network;

    fn sample() -> TripartiteGraph {
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

    #[test]
    fn sample_flow_value_is_five() {
        let h = build_network(&sample());
        let state = max_flow(&h);
        assert_eq!(state.value(), 5);
    }

    #[test]
    fn paths_are_disjoint_and_shaped() {
        let h = build_network(&sample());
        let state = max_flow(&h);
        let paths = paths_from_flow(&h, &state);
        assert_eq!(paths.value(), 5);
        let mut seen = std::collections::HashSet::new();
        for path in paths.paths() {
            assert_eq!(path[0], SOURCE);
            assert_eq!(path[4], SINK);
            for &u in &path[1..4] {
                assert!(seen.insert(u), "internal node {u} reused across paths");
            }
        }
    }

    #[test]
    fn separator_matches_flow_and_separates() {
        let h = build_network(&sample());
        let state = max_flow(&h);
        let sep = min_separator(&h, &state);
        assert_eq!(sep.len(), state.value());
        assert!(is_separator(&h, &sep));
    }

    #[test]
    fn undersized_node_sets_do_not_separate() {
        let h = build_network(&sample());
        let state = max_flow(&h);
        let sep = min_separator(&h, &state);
        // Dropping any single node from a minimum separator reopens a path.
        for &skip in sep.nodes() {
            let smaller = Separator::from_nodes(sep.nodes().iter().copied().filter(|&u| u != skip));
            assert!(!is_separator(&h, &smaller));
        }
    }

    #[test]
    fn edge_node_separator_is_accepted() {
        // All edge nodes always form a separator: every path crosses one.
        let h = build_network(&sample());
        let first = 2 + 2 * 4; // after the two copies of B
        let sep = Separator::from_nodes(first..first + 7);
        assert!(is_separator(&h, &sep));
    }

    #[test]
    fn degenerate_networks_have_zero_flow() {
        let g = TripartiteGraph::new([], [0], [1], vec![], vec![], vec![(0, 1)]);
        let h = build_network(&g);
        let state = max_flow(&h);
        assert_eq!(state.value(), 0);
        assert!(paths_from_flow(&h, &state).is_empty());
        let sep = min_separator(&h, &state);
        assert!(sep.is_empty());
        assert!(is_separator(&h, &sep));

        let g = TripartiteGraph::new([0], [1], [2], vec![(0, 1)], vec![(0, 2)], vec![]);
        let h = build_network(&g);
        assert_eq!(max_flow(&h).value(), 0);
    }

    #[test]
    fn flow_value_counts_bc_structure_not_ab_ac() {
        // K_{1,2,2} with a complete BC side: one copy of each bank vertex,
        // flow limited by the two B copies.
        let g = TripartiteGraph::new(
            [0],
            [1, 2],
            [3, 4],
            vec![(0, 1), (0, 2)],
            vec![(0, 3), (0, 4)],
            vec![(1, 3), (1, 4), (2, 3), (2, 4)],
        );
        let h = build_network(&g);
        assert_eq!(max_flow(&h).value(), 2);
    }
}
