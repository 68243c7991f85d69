//! End-to-end solver: orient the graph, run the flow pipeline, and emit a
//! minimum transversal and maximum packing of equal size, both re-verified
//! against the input graph before they are returned.

use crate::error::Error;
use crate::graph::{Edge, Packing, Part, Transversal, Triangle, TripartiteGraph};
use crate::koenig::{edge_color, extract_subgraph, EdgeColoring};
use crate::menger::{max_flow, min_separator, paths_from_flow, Separator};
use crate::network::{build_network, NetNode, NetworkGraph};

/// The solver's output: a transversal and a packing of equal size, with
/// the results of the final verification pass.
///
/// For certificates produced by [`solve`] all three flags are true — the
/// solver refuses to return anything that fails its own verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub transversal: Transversal,
    pub packing: Packing,
    /// Common size of both certificates: the optimum.
    pub value: usize,
    pub transversal_verified: bool,
    pub packing_verified: bool,
    pub sizes_equal: bool,
}

/// Maps a separator of the network for `g` to an edge set of `g` with one
/// edge per separator node.
///
/// `g` must be the apex-oriented graph that `h` was built from. An edge
/// node contributes its BC edge; copy `i` of a bank vertex `w` contributes
/// the apex edge from the `i`-th apex vertex to `w`. The resulting set is
/// checked with [`TripartiteGraph::is_transversal`] and rejected with
/// [`Error::InvalidSeparator`] if it fails.
pub fn separator_to_transversal(
    sep: &Separator,
    h: &NetworkGraph,
    g: &TripartiteGraph,
) -> Result<Transversal, Error> {
    let apex = g.part(Part::A);
    let mut edges = Vec::with_capacity(sep.len());
    for &u in sep.nodes() {
        let edge = match h.node(u) {
            NetNode::EdgeNode { b, c } => Edge::new(*b, *c),
            NetNode::BCopy { copy, vertex } | NetNode::CCopy { copy, vertex } => {
                let &a = apex
                    .get(copy - 1)
                    .ok_or(Error::InternalInvariant("copy index exceeds apex size"))?;
                Edge::new(a, *vertex)
            }
            NetNode::Source | NetNode::Sink => {
                return Err(Error::InternalInvariant(
                    "separator contains source or sink",
                ))
            }
        };
        edges.push(edge);
    }
    let transversal = Transversal::new(edges);
    if transversal.len() != sep.len() {
        return Err(Error::InternalInvariant(
            "separator nodes mapped to colliding edges",
        ));
    }
    if !g.is_transversal(transversal.edges())? {
        return Err(Error::InvalidSeparator);
    }
    Ok(transversal)
}

/// Joins the `i`-th color class to the `i`-th apex vertex, turning each
/// matching edge `b`–`c` into the triangle `(aᵢ, b, c)`.
///
/// `g` must be apex-oriented. Matchings keep the BC edges disjoint per
/// apex vertex and distinct apex vertices keep the AB/AC edges apart, so
/// the result is a packing as long as there are enough apex vertices.
pub fn assemble_packing(coloring: &EdgeColoring, g: &TripartiteGraph) -> Result<Packing, Error> {
    let apex = g.part(Part::A);
    if coloring.class_count() > apex.len() {
        return Err(Error::TooManyColorClasses {
            classes: coloring.class_count(),
            apex: apex.len(),
        });
    }
    let mut triangles = Vec::with_capacity(coloring.edge_count());
    for (i, class) in coloring.classes().iter().enumerate() {
        let a = apex[i];
        for &e in class {
            let (x, y) = e.endpoints();
            let (b, c) = match (g.part_of(x), g.part_of(y)) {
                (Some(Part::B), Some(Part::C)) => (x, y),
                (Some(Part::C), Some(Part::B)) => (y, x),
                _ => return Err(Error::EdgeNotInGraph(e)),
            };
            triangles.push(Triangle::new(a, b, c));
        }
    }
    Ok(Packing::new(triangles))
}

/// Restates a triangle of the oriented graph in the part roles of the
/// original graph.
fn restore_roles(t: Triangle, g: &TripartiteGraph) -> Result<Triangle, Error> {
    let (mut a, mut b, mut c) = (None, None, None);
    for v in [t.a, t.b, t.c] {
        match g.part_of(v) {
            Some(Part::A) => a = Some(v),
            Some(Part::B) => b = Some(v),
            Some(Part::C) => c = Some(v),
            None => return Err(Error::InternalInvariant("triangle vertex left the graph")),
        }
    }
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Ok(Triangle::new(a, b, c)),
        _ => Err(Error::InternalInvariant(
            "triangle misses a part after reorientation",
        )),
    }
}

/// Computes a minimum triangle transversal and a maximum triangle packing
/// of equal size for a bilaterally complete tripartite graph.
///
/// Pipeline: validate, orient the apex to part A, build the network, find
/// a maximum flow, read the minimum separator off the residual graph and
/// map it to a transversal, decompose the flow into disjoint paths, color
/// the extracted BC subgraph, and join each matching to one apex vertex.
/// Both certificates are verified against the *input* graph (in its
/// original part roles) before returning.
pub fn solve(g: &TripartiteGraph) -> Result<Certificate, Error> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report.issues));
    }
    let orientation = g.detect_orientation()?;
    let oriented = orientation.apply(g);

    let h = build_network(&oriented);
    let flow = max_flow(&h);
    let separator = min_separator(&h, &flow);
    if separator.len() != flow.value() {
        return Err(Error::InternalInvariant(
            "separator size differs from flow value",
        ));
    }
    let transversal = separator_to_transversal(&separator, &h, &oriented)?;

    let paths = paths_from_flow(&h, &flow);
    let subgraph = extract_subgraph(&paths, &h);
    let coloring = edge_color(&subgraph);
    let packing_oriented = assemble_packing(&coloring, &oriented)?;
    let packing = Packing::new(
        packing_oriented
            .triangles()
            .iter()
            .map(|&t| restore_roles(t, g))
            .collect::<Result<Vec<_>, _>>()?,
    );

    let transversal_verified = g.is_transversal(transversal.edges())?;
    let packing_verified = g.is_packing(packing.triangles())?;
    let sizes_equal = transversal.len() == packing.len() && packing.len() == flow.value();
    if !(transversal_verified && packing_verified && sizes_equal) {
        return Err(Error::InternalInvariant(
            "certificates failed final verification",
        ));
    }
    Ok(Certificate {
        value: transversal.len(),
        transversal,
        packing,
        transversal_verified,
        packing_verified,
        sizes_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koenig::BipartiteSubgraph;

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

    fn complete(p: u32, q: u32, r: u32) -> TripartiteGraph {
        let a: Vec<u32> = (0..p).collect();
        let b: Vec<u32> = (p..p + q).collect();
        let c: Vec<u32> = (p + q..p + q + r).collect();
        let cross = |xs: &[u32], ys: &[u32]| -> Vec<(u32, u32)> {
            xs.iter()
                .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
                .collect()
        };
        let e_ab = cross(&a, &b);
        let e_ac = cross(&a, &c);
        let e_bc = cross(&b, &c);
        TripartiteGraph::new(a, b, c, e_ab, e_ac, e_bc)
    }

    #[test]
    fn sample_solves_to_five_with_the_known_transversal() {
        let cert = solve(&sample()).unwrap();
        assert_eq!(cert.value, 5);
        assert!(cert.transversal_verified && cert.packing_verified && cert.sizes_equal);
        // This instance has a unique minimum transversal.
        let expected = Transversal::new([
            Edge::new(0, 2),
            Edge::new(0, 9),
            Edge::new(1, 2),
            Edge::new(1, 9),
            Edge::new(3, 8),
        ]);
        assert_eq!(cert.transversal, expected);
        assert_eq!(cert.packing.len(), 5);
    }

    #[test]
    fn complete_graphs_solve_to_pq() {
        for (p, q, r) in [(1, 1, 1), (1, 2, 3), (2, 2, 2), (2, 3, 4), (3, 3, 3)] {
            let g = complete(p, q, r);
            let cert = solve(&g).unwrap();
            assert_eq!(cert.value, (p * q) as usize, "K_{{{p},{q},{r}}}");
        }
    }

    #[test]
    fn empty_and_triangle_free_graphs_solve_to_zero() {
        let g = TripartiteGraph::new([], [], [], vec![], vec![], vec![]);
        let cert = solve(&g).unwrap();
        assert_eq!(cert.value, 0);
        assert!(cert.transversal.is_empty() && cert.packing.is_empty());

        // Complete AB and AC sides but no BC edges: no triangles.
        let g = TripartiteGraph::new(
            [0],
            [1, 2],
            [3, 4],
            vec![(0, 1), (0, 2)],
            vec![(0, 3), (0, 4)],
            vec![],
        );
        assert_eq!(solve(&g).unwrap().value, 0);
    }

    #[test]
    fn solve_handles_non_identity_orientations() {
        // The sparse side is AB, so C is the apex; certificates must come
        // back expressed in the original roles.
        let g = TripartiteGraph::new(
            [0, 1],
            [2, 3],
            [4],
            vec![(0, 2), (1, 3)],
            vec![(0, 4), (1, 4)],
            vec![(2, 4), (3, 4)],
        );
        let cert = solve(&g).unwrap();
        assert_eq!(cert.value, 2);
        assert_eq!(g.is_transversal(cert.transversal.edges()), Ok(true));
        assert_eq!(g.is_packing(cert.packing.triangles()), Ok(true));
    }

    #[test]
    fn solve_rejects_invalid_and_incomplete_graphs() {
        let invalid = TripartiteGraph::new([0], [0], [1], vec![], vec![], vec![]);
        assert!(matches!(solve(&invalid), Err(Error::InvalidGraph(_))));

        let incomplete = TripartiteGraph::new(
            [0, 1],
            [2, 3],
            [4, 5],
            vec![(0, 2)],
            vec![(0, 4)],
            vec![(2, 4), (2, 5), (3, 4), (3, 5)],
        );
        assert_eq!(solve(&incomplete), Err(Error::NotBilaterallyComplete));
    }

    #[test]
    fn separator_to_transversal_maps_the_textbook_separator() {
        // For the sample instance, cutting both copies of B vertex 2, the
        // edge node 3-8, and both copies of C vertex 9 is a separator; it
        // maps to the unique minimum transversal.
        let g = sample();
        let h = build_network(&g);
        let b2_1 = h.find_node(&NetNode::BCopy { copy: 1, vertex: 2 }).unwrap();
        let b2_2 = h.find_node(&NetNode::BCopy { copy: 2, vertex: 2 }).unwrap();
        let e38 = h.find_node(&NetNode::EdgeNode { b: 3, c: 8 }).unwrap();
        let c9_1 = h.find_node(&NetNode::CCopy { copy: 1, vertex: 9 }).unwrap();
        let c9_2 = h.find_node(&NetNode::CCopy { copy: 2, vertex: 9 }).unwrap();
        let sep = Separator::from_nodes([b2_1, b2_2, e38, c9_1, c9_2]);
        assert!(crate::menger::is_separator(&h, &sep));
        let t = separator_to_transversal(&sep, &h, &g).unwrap();
        assert_eq!(
            t.edges(),
            &[
                Edge::new(0, 2),
                Edge::new(0, 9),
                Edge::new(1, 2),
                Edge::new(1, 9),
                Edge::new(3, 8),
            ]
        );
    }

    #[test]
    fn separator_to_transversal_rejects_non_separators() {
        let g = sample();
        let h = build_network(&g);
        // A single edge node never separates this instance.
        let e26 = h.find_node(&NetNode::EdgeNode { b: 2, c: 6 }).unwrap();
        let sep = Separator::from_nodes([e26]);
        assert_eq!(
            separator_to_transversal(&sep, &h, &g),
            Err(Error::InvalidSeparator)
        );
    }

    #[test]
    fn assemble_packing_needs_enough_apex_vertices() {
        // A bipartite subgraph with maximum degree 2 cannot be joined to a
        // single apex vertex.
        let g = complete(1, 2, 2);
        let f = BipartiteSubgraph::new(vec![(1, 3), (1, 4), (2, 3)]).unwrap();
        let coloring = edge_color(&f);
        assert_eq!(
            assemble_packing(&coloring, &g),
            Err(Error::TooManyColorClasses {
                classes: 2,
                apex: 1
            })
        );
    }
}
