//! Exact reference oracles for cross-checking the constructive solver.
//!
//! Two branch-and-bound searches compute the maximum packing and minimum
//! transversal of any small tripartite graph directly from the triangle
//! list, and two independent subset minimizations recompute the optimum
//! for bilaterally complete instances from closed-form expressions. All
//! four refuse instances beyond an explicit budget instead of silently
//! taking forever.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use crate::error::Error;
use crate::graph::{Edge, Packing, Part, Side, Transversal, Triangle, TripartiteGraph};

/// Size and time limits for the oracles. The defaults keep every search
/// comfortably below a second; the acceptance suite passes larger ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on the triangle count for the two branching searches.
    pub max_triangles: usize,
    /// Cap on the BC edge count for the subset minimization over BC edges.
    pub max_bc_edges: usize,
    /// Cap on `|B| + |C|` for the subset-pair minimization.
    pub max_bc_vertices: usize,
    /// Soft wall-clock limit, checked periodically inside the searches.
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget {
            max_triangles: 40,
            max_bc_edges: 14,
            max_bc_vertices: 14,
            time_limit: Duration::from_secs(30),
        }
    }
}

/// Periodic wall-clock check, amortized to one `Instant::now()` per 1024
/// search nodes.
struct Deadline {
    at: Instant,
    counter: u32,
}

impl Deadline {
    fn new(limit: Duration) -> Deadline {
        Deadline {
            at: Instant::now() + limit,
            counter: 0,
        }
    }

    fn check(&mut self) -> Result<(), Error> {
        self.counter = self.counter.wrapping_add(1);
        if self.counter.is_multiple_of(1024) && Instant::now() >= self.at {
            return Err(Error::BudgetExceeded("time limit reached".into()));
        }
        Ok(())
    }
}

/// All distinct edges of the graph with stable integer ids.
struct EdgeIndex {
    edges: Vec<Edge>,
    ids: HashMap<Edge, usize>,
}

impl EdgeIndex {
    fn build(g: &TripartiteGraph) -> EdgeIndex {
        let mut edges: Vec<Edge> = Side::ALL
            .into_iter()
            .flat_map(|s| g.side_edges(s).iter().copied())
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let ids = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        EdgeIndex { edges, ids }
    }

    fn id(&self, e: Edge) -> usize {
        self.ids[&e]
    }
}

fn validated_triangles(g: &TripartiteGraph, budget: &OracleBudget) -> Result<Vec<Triangle>, Error> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report.issues));
    }
    let tris = g.triangles();
    if tris.len() > budget.max_triangles {
        return Err(Error::BudgetExceeded(format!(
            "instance has {} triangles, budget allows {}",
            tris.len(),
            budget.max_triangles
        )));
    }
    Ok(tris)
}

/// Exhaustive maximum triangle packing by branch and bound.
///
/// Triangles are grouped by their BC edge; a packing takes at most one
/// triangle per BC edge, so the search walks those groups and either picks
/// one compatible triangle or skips the group, pruning whenever even one
/// triangle per remaining group cannot beat the incumbent.
pub fn brute_max_packing(g: &TripartiteGraph, budget: &OracleBudget) -> Result<Packing, Error> {
    let tris = validated_triangles(g, budget)?;
    let index = EdgeIndex::build(g);
    let tri_edges: Vec<[usize; 3]> = tris
        .iter()
        .map(|t| t.edges().map(|e| index.id(e)))
        .collect();
    let mut groups: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (i, t) in tris.iter().enumerate() {
        groups.entry((t.b, t.c)).or_default().push(i);
    }
    let levels: Vec<Vec<usize>> = groups.into_values().collect();

    struct Search<'a> {
        levels: &'a [Vec<usize>],
        tri_edges: &'a [[usize; 3]],
        used: Vec<bool>,
        current: Vec<usize>,
        best: Vec<usize>,
        deadline: Deadline,
    }

    impl Search<'_> {
        fn run(&mut self, level: usize) -> Result<(), Error> {
            self.deadline.check()?;
            // Each remaining group contributes at most one triangle.
            if self.current.len() + (self.levels.len() - level) <= self.best.len() {
                return Ok(());
            }
            if level == self.levels.len() {
                // Strictly better than the incumbent, or the bound above
                // would have cut this leaf off.
                self.best = self.current.clone();
                return Ok(());
            }
            for &ti in &self.levels[level] {
                if self.tri_edges[ti].iter().all(|&e| !self.used[e]) {
                    for &e in &self.tri_edges[ti] {
                        self.used[e] = true;
                    }
                    self.current.push(ti);
                    self.run(level + 1)?;
                    self.current.pop();
                    for &e in &self.tri_edges[ti] {
                        self.used[e] = false;
                    }
                }
            }
            self.run(level + 1)
        }
    }

    let mut search = Search {
        levels: &levels,
        tri_edges: &tri_edges,
        used: vec![false; index.edges.len()],
        current: Vec::new(),
        best: Vec::new(),
        deadline: Deadline::new(budget.time_limit),
    };
    search.run(0)?;
    let packing = Packing::new(search.best.iter().map(|&i| tris[i]));
    debug_assert_eq!(g.is_packing(packing.triangles()), Ok(true));
    Ok(packing)
}

/// Branch-and-bound search shared by minimization and enumeration.
///
/// At each node the lowest-index uncovered triangle is covered by one of
/// its three edges; after a branch tries an edge, that edge is excluded
/// from the remaining branches, so the three subtrees are disjoint and
/// enumeration cannot emit a set twice. The bound is a greedy family of
/// edge-disjoint uncovered triangles, each of which forces one more edge.
struct CoverSearch<'a> {
    tri_edges: &'a [[usize; 3]],
    chosen: Vec<bool>,
    excluded: Vec<bool>,
    stack: Vec<usize>,
    best: Vec<usize>,
    /// `Some((target, sets))` switches from minimization to collecting
    /// every transversal of exactly `target` edges.
    collect: Option<(usize, Vec<Vec<usize>>)>,
    scratch: Vec<bool>,
    deadline: Deadline,
}

impl CoverSearch<'_> {
    fn first_uncovered(&self) -> Option<usize> {
        (0..self.tri_edges.len()).find(|&i| !self.tri_edges[i].iter().any(|&e| self.chosen[e]))
    }

    fn lower_bound(&mut self) -> usize {
        self.scratch.fill(false);
        let mut bound = 0;
        for edges in self.tri_edges {
            let uncovered = !edges.iter().any(|&e| self.chosen[e]);
            if uncovered && edges.iter().all(|&e| !self.scratch[e]) {
                bound += 1;
                for &e in edges {
                    self.scratch[e] = true;
                }
            }
        }
        bound
    }

    fn run(&mut self) -> Result<(), Error> {
        self.deadline.check()?;
        let Some(ti) = self.first_uncovered() else {
            match &mut self.collect {
                Some((target, sets)) => {
                    if self.stack.len() == *target {
                        let mut set = self.stack.clone();
                        set.sort_unstable();
                        sets.push(set);
                    }
                }
                None => {
                    if self.stack.len() < self.best.len() {
                        self.best = self.stack.clone();
                    }
                }
            }
            return Ok(());
        };
        let bound = self.stack.len() + self.lower_bound();
        let hopeless = match &self.collect {
            Some((target, _)) => bound > *target,
            None => bound >= self.best.len(),
        };
        if hopeless {
            return Ok(());
        }
        let edges = self.tri_edges[ti];
        let mut newly_excluded = [usize::MAX; 3];
        for (slot, &e) in edges.iter().enumerate() {
            if self.excluded[e] {
                continue;
            }
            self.chosen[e] = true;
            self.stack.push(e);
            self.run()?;
            self.stack.pop();
            self.chosen[e] = false;
            self.excluded[e] = true;
            newly_excluded[slot] = e;
        }
        for e in newly_excluded {
            if e != usize::MAX {
                self.excluded[e] = false;
            }
        }
        Ok(())
    }
}

/// Shared setup for the two cover searches.
struct CoverSetup {
    index: EdgeIndex,
    /// Edge-id triple of each triangle.
    tri_edges: Vec<[usize; 3]>,
    /// Initial incumbent: the distinct BC edges of all triangles.
    initial: Vec<usize>,
}

fn cover_setup(g: &TripartiteGraph, budget: &OracleBudget) -> Result<CoverSetup, Error> {
    let tris = validated_triangles(g, budget)?;
    let index = EdgeIndex::build(g);
    let tri_edges: Vec<[usize; 3]> = tris
        .iter()
        .map(|t| t.edges().map(|e| index.id(e)))
        .collect();
    // The distinct BC edges of the triangles form a transversal: a usable
    // incumbent that every strict improvement must beat.
    let mut initial: Vec<usize> = tri_edges.iter().map(|e| e[2]).collect();
    initial.sort_unstable();
    initial.dedup();
    Ok(CoverSetup {
        index,
        tri_edges,
        initial,
    })
}

/// Exhaustive minimum triangle transversal by branch and bound.
pub fn brute_min_transversal(
    g: &TripartiteGraph,
    budget: &OracleBudget,
) -> Result<Transversal, Error> {
    let CoverSetup {
        index,
        tri_edges,
        initial,
    } = cover_setup(g, budget)?;
    let mut search = CoverSearch {
        tri_edges: &tri_edges,
        chosen: vec![false; index.edges.len()],
        excluded: vec![false; index.edges.len()],
        stack: Vec::new(),
        best: initial,
        collect: None,
        scratch: vec![false; index.edges.len()],
        deadline: Deadline::new(budget.time_limit),
    };
    search.run()?;
    let transversal = Transversal::new(search.best.iter().map(|&e| index.edges[e]));
    debug_assert_eq!(g.is_transversal(transversal.edges()), Ok(true));
    Ok(transversal)
}

/// Every minimum transversal, in sorted order.
///
/// Runs the minimization first to learn the optimum, then re-runs the same
/// disjoint branching collecting each transversal that hits it exactly.
pub fn enumerate_min_transversals(
    g: &TripartiteGraph,
    budget: &OracleBudget,
) -> Result<Vec<Transversal>, Error> {
    let minimum = brute_min_transversal(g, budget)?;
    let CoverSetup {
        index, tri_edges, ..
    } = cover_setup(g, budget)?;
    let mut search = CoverSearch {
        tri_edges: &tri_edges,
        chosen: vec![false; index.edges.len()],
        excluded: vec![false; index.edges.len()],
        stack: Vec::new(),
        best: Vec::new(),
        collect: Some((minimum.len(), Vec::new())),
        scratch: vec![false; index.edges.len()],
        deadline: Deadline::new(budget.time_limit),
    };
    search.run()?;
    let (_, sets) = search
        .collect
        .take()
        .expect("collection mode was switched on");
    let mut out: Vec<Transversal> = sets
        .into_iter()
        .map(|set| Transversal::new(set.into_iter().map(|e| index.edges[e])))
        .collect();
    out.sort_by(|x, y| x.edges().cmp(y.edges()));
    out.dedup();
    debug_assert!(out.contains(&minimum));
    Ok(out)
}

fn oriented_for_formulas(g: &TripartiteGraph) -> Result<TripartiteGraph, Error> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report.issues));
    }
    Ok(g.detect_orientation()?.apply(g))
}

/// Kuhn's augmenting-path step for maximum bipartite matching.
fn augment(b: usize, adj: &[Vec<usize>], seen: &mut [bool], match_c: &mut [Option<usize>]) -> bool {
    for &c in &adj[b] {
        if seen[c] {
            continue;
        }
        seen[c] = true;
        if match_c[c].is_none_or(|other| augment(other, adj, seen, match_c)) {
            match_c[c] = Some(b);
            return true;
        }
    }
    false
}

/// Optimum of a bilaterally complete instance by minimizing over subsets
/// of BC edges: each subset `E'` costs `|E'|` plus `p` times the minimum
/// vertex cover of the remaining BC edges.
///
/// The inner cover size is computed as a maximum bipartite matching — the
/// two are equal on bipartite graphs — so only the outer loop is
/// exponential, hence the cap on the BC edge count.
pub fn uniform_transversal_min(g: &TripartiteGraph, budget: &OracleBudget) -> Result<usize, Error> {
    let og = oriented_for_formulas(g)?;
    let pairs = og.bc_pairs();
    let m = pairs.len();
    if m > budget.max_bc_edges || m >= 63 {
        return Err(Error::BudgetExceeded(format!(
            "instance has {} BC edges, budget allows {}",
            m,
            budget.max_bc_edges.min(62)
        )));
    }
    let p = og.part(Part::A).len();
    let q = og.part(Part::B).len();
    let r = og.part(Part::C).len();
    let endpoints: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(b, c)| {
            let (_, bi) = og.position_in_part(b).expect("endpoint is in part B");
            let (_, ci) = og.position_in_part(c).expect("endpoint is in part C");
            (bi, ci)
        })
        .collect();

    let mut deadline = Deadline::new(budget.time_limit);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); q];
    let mut match_c: Vec<Option<usize>> = vec![None; r];
    let mut seen = vec![false; r];
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << m) {
        deadline.check()?;
        let removed = mask.count_ones() as usize;
        if removed >= best {
            continue;
        }
        for row in adj.iter_mut() {
            row.clear();
        }
        for (i, &(bi, ci)) in endpoints.iter().enumerate() {
            if mask & (1 << i) == 0 {
                adj[bi].push(ci);
            }
        }
        match_c.fill(None);
        let mut matching = 0;
        for b in 0..q {
            seen.fill(false);
            if augment(b, &adj, &mut seen, &mut match_c) {
                matching += 1;
            }
        }
        best = best.min(removed + p * matching);
    }
    Ok(best)
}

/// Optimum of a bilaterally complete instance by minimizing over subset
/// pairs `B″ ⊆ B`, `C″ ⊆ C`: count the BC edges with both endpoints kept
/// and charge `p` for every dropped bank vertex.
pub fn mao_cheng_min(g: &TripartiteGraph, budget: &OracleBudget) -> Result<usize, Error> {
    let og = oriented_for_formulas(g)?;
    let q = og.part(Part::B).len();
    let r = og.part(Part::C).len();
    if q + r > budget.max_bc_vertices || q >= 63 || r >= 63 {
        return Err(Error::BudgetExceeded(format!(
            "instance has {} bank vertices, budget allows {}",
            q + r,
            budget.max_bc_vertices
        )));
    }
    let p = og.part(Part::A).len();
    let endpoints: Vec<(usize, usize)> = og
        .bc_pairs()
        .iter()
        .map(|&(b, c)| {
            let (_, bi) = og.position_in_part(b).expect("endpoint is in part B");
            let (_, ci) = og.position_in_part(c).expect("endpoint is in part C");
            (bi, ci)
        })
        .collect();

    let mut deadline = Deadline::new(budget.time_limit);
    let mut hist = vec![0usize; r];
    let mut best = usize::MAX;
    for bmask in 0u64..(1u64 << q) {
        deadline.check()?;
        hist.fill(0);
        for &(bi, ci) in &endpoints {
            if bmask & (1 << bi) != 0 {
                hist[ci] += 1;
            }
        }
        let b_dropped = q - bmask.count_ones() as usize;
        for cmask in 0u64..(1u64 << r) {
            let mut inside = 0;
            for (ci, &h) in hist.iter().enumerate() {
                if cmask & (1 << ci) != 0 {
                    inside += h;
                }
            }
            let c_dropped = r - cmask.count_ones() as usize;
            best = best.min(inside + p * (b_dropped + c_dropped));
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

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
        let (e_ab, e_ac, e_bc) = (cross(&a, &b), cross(&a, &c), cross(&b, &c));
        TripartiteGraph::new(a, b, c, e_ab, e_ac, e_bc)
    }

    #[test]
    fn all_four_oracles_agree_on_the_sample() {
        let g = sample();
        let budget = OracleBudget::default();
        assert_eq!(brute_max_packing(&g, &budget).unwrap().len(), 5);
        assert_eq!(brute_min_transversal(&g, &budget).unwrap().len(), 5);
        assert_eq!(uniform_transversal_min(&g, &budget), Ok(5));
        assert_eq!(mao_cheng_min(&g, &budget), Ok(5));
    }

    #[test]
    fn sample_minimum_transversal_is_unique() {
        let g = sample();
        let all = enumerate_min_transversals(&g, &OracleBudget::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].edges(),
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
    fn complete_instances_cost_pq() {
        let budget = OracleBudget::default();
        for (p, q, r) in [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 2, 3)] {
            let g = complete(p, q, r);
            let want = (p * q) as usize;
            assert_eq!(brute_max_packing(&g, &budget).unwrap().len(), want);
            assert_eq!(brute_min_transversal(&g, &budget).unwrap().len(), want);
            assert_eq!(uniform_transversal_min(&g, &budget), Ok(want));
            assert_eq!(mao_cheng_min(&g, &budget), Ok(want));
        }
    }

    #[test]
    fn single_triangle_has_three_minimum_transversals() {
        let g = complete(1, 1, 1);
        let all = enumerate_min_transversals(&g, &OracleBudget::default()).unwrap();
        let sets: Vec<&[Edge]> = all.iter().map(|t| t.edges()).collect();
        assert_eq!(
            sets,
            vec![
                &[Edge::new(0, 1)][..],
                &[Edge::new(0, 2)][..],
                &[Edge::new(1, 2)][..],
            ]
        );
    }

    #[test]
    fn empty_graph_costs_nothing() {
        let g = TripartiteGraph::new([], [], [], vec![], vec![], vec![]);
        let budget = OracleBudget::default();
        assert_eq!(brute_max_packing(&g, &budget).unwrap().len(), 0);
        assert_eq!(brute_min_transversal(&g, &budget).unwrap().len(), 0);
        assert_eq!(enumerate_min_transversals(&g, &budget).unwrap().len(), 1);
        assert_eq!(uniform_transversal_min(&g, &budget), Ok(0));
        assert_eq!(mao_cheng_min(&g, &budget), Ok(0));
    }

    #[test]
    fn brute_oracles_handle_general_tripartite_graphs() {
        // Incomplete on all three sides; the formula oracles refuse it but
        // the branching oracles bound each other.
        let g = TripartiteGraph::new(
            [0, 1],
            [2, 3],
            [4, 5],
            vec![(0, 2), (0, 3), (1, 2)],
            vec![(0, 4), (0, 5), (1, 5)],
            vec![(2, 4), (2, 5), (3, 5)],
        );
        let budget = OracleBudget::default();
        let packing = brute_max_packing(&g, &budget).unwrap();
        let transversal = brute_min_transversal(&g, &budget).unwrap();
        assert!(packing.len() <= transversal.len());
        assert!(transversal.len() <= 3 * packing.len());
        assert_eq!(
            uniform_transversal_min(&g, &budget),
            Err(Error::NotBilaterallyComplete)
        );
        assert_eq!(
            mao_cheng_min(&g, &budget),
            Err(Error::NotBilaterallyComplete)
        );
    }

    #[test]
    fn budgets_refuse_oversized_instances() {
        // K_{3,4,4} has 48 triangles and 16 BC edges: over every default cap
        // once the bank grows past 14 vertices.
        let g = complete(3, 4, 4);
        let budget = OracleBudget::default();
        assert!(matches!(
            brute_max_packing(&g, &budget),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            brute_min_transversal(&g, &budget),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            uniform_transversal_min(&g, &budget),
            Err(Error::BudgetExceeded(_))
        ));
        let wide = complete(1, 7, 8);
        assert!(matches!(
            mao_cheng_min(&wide, &budget),
            Err(Error::BudgetExceeded(_))
        ));
        // A loosened budget accepts what the default refuses.
        let roomy = OracleBudget {
            max_triangles: 48,
            max_bc_edges: 16,
            ..OracleBudget::default()
        };
        assert_eq!(brute_max_packing(&g, &roomy).unwrap().len(), 12);
        assert_eq!(uniform_transversal_min(&g, &roomy), Ok(12));
    }

    #[test]
    fn zero_time_limit_aborts_a_large_search() {
        let g = complete(2, 4, 4); // 2^16 subsets in the uniform oracle
        let budget = OracleBudget {
            max_bc_edges: 16,
            time_limit: Duration::ZERO,
            ..OracleBudget::default()
        };
        assert_eq!(
            uniform_transversal_min(&g, &budget),
            Err(Error::BudgetExceeded("time limit reached".to_string()))
        );
    }

    #[test]
    fn oracles_reject_invalid_graphs() {
        let g = TripartiteGraph::new([0], [0], [1], vec![], vec![], vec![]);
        let budget = OracleBudget::default();
        assert!(matches!(
            brute_max_packing(&g, &budget),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            uniform_transversal_min(&g, &budget),
            Err(Error::InvalidGraph(_))
        ));
    }
}
