//! Steiner tree solvers: exact terminal-subset dynamic programming, the
//! shortest-path growth heuristic, and exhaustive subset oracles that serve
//! as independent ground truth for both problem flavors.
//!
//! Every solver is a deterministic function of its instance. Cost ties are
//! broken toward the tree whose sorted edge-id sequence is lexicographically
//! smallest (exact solver), the lowest edge id (heuristic paths), or the
//! lowest vertex-subset bitmask (oracles), so repeated runs are
//! bit-identical.

use crate::error::{Error, Result};
use crate::graph::{
    dijkstra_multi, minimum_spanning_tree, Cost, EdgeId, Graph, SteinerTree, VertexId,
};
use crate::instance::{GstpInstance, StpgInstance};
use crate::reduction::{extract, transform, ReducedInstance};
use std::collections::BTreeSet;

/// Terminal-count cap for the exact solver's subset table.
pub const DEFAULT_TERMINAL_LIMIT: usize = 14;

/// Vertex-count cap for the exhaustive subset oracles.
pub const ORACLE_VERTEX_LIMIT: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    ExactDp,
    HeuristicSph,
    OracleStpg,
    OracleGstp,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::ExactDp => "exact-dp",
            SolveMethod::HeuristicSph => "heuristic-sph",
            SolveMethod::OracleStpg => "oracle-stpg",
            SolveMethod::OracleGstp => "oracle-gstp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub tree: SteinerTree,
    pub optimal: bool,
    pub method: SolveMethod,
}

/// Sorted edge-id sequence realized by a dynamic-programming state.
type EdgeSeq = Vec<u32>;

fn seq_with_edge(seq: &[u32], id: u32) -> EdgeSeq {
    match seq.binary_search(&id) {
        Ok(_) => seq.to_vec(),
        Err(pos) => {
            let mut out = Vec::with_capacity(seq.len() + 1);
            out.extend_from_slice(&seq[..pos]);
            out.push(id);
            out.extend_from_slice(&seq[pos..]);
            out
        }
    }
}

fn seq_union(a: &[u32], b: &[u32]) -> EdgeSeq {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Installs `(cost, edges)` into `slot` when it beats the current value
/// under (cost, lexicographic edge sequence). Returns true on change.
fn offer(slot: &mut Option<(Cost, EdgeSeq)>, cost: Cost, edges: EdgeSeq) -> bool {
    let take = match slot {
        None => true,
        Some((c, e)) => cost < *c || (cost == *c && edges < *e),
    };
    if take {
        *slot = Some((cost, edges));
    }
    take
}

/// Exact minimum Steiner tree by dynamic programming over terminal subsets,
/// with the default terminal limit.
pub fn solve_exact_stpg(instance: &StpgInstance) -> Result<SolveResult> {
    solve_exact_stpg_with_limit(instance, DEFAULT_TERMINAL_LIMIT)
}

/// Exact minimum Steiner tree by dynamic programming over terminal subsets.
///
/// State (S, v) holds the cost and realized edge set of the best tree
/// containing v and the terminals of S; subsets merge at a shared vertex and
/// then propagate along edges to a deterministic fixpoint. On cost ties the
/// candidate with the lexicographically smallest sorted edge-id sequence
/// wins, which in reduced instances favors original edges over dummy edges.
pub fn solve_exact_stpg_with_limit(
    instance: &StpgInstance,
    terminal_limit: usize,
) -> Result<SolveResult> {
    let graph = instance.graph();
    let terminals: Vec<VertexId> = instance.terminals().iter().copied().collect();
    let k = terminals.len();
    if k > terminal_limit {
        return Err(Error::Capacity {
            what: "exact solver terminals",
            limit: terminal_limit,
            actual: k,
        });
    }
    if k == 1 {
        return Ok(SolveResult {
            tree: SteinerTree::single_vertex(graph, terminals[0])?,
            optimal: true,
            method: SolveMethod::ExactDp,
        });
    }
    let n = graph.vertex_count();
    let full: usize = (1 << k) - 1;
    let mut dp: Vec<Option<(Cost, EdgeSeq)>> = vec![None; (full + 1) * n];
    for (i, &t) in terminals.iter().enumerate() {
        dp[(1 << i) * n + t] = Some((0, Vec::new()));
    }
    for mask in 1..=full {
        if mask.count_ones() >= 2 {
            // merge disjoint terminal subsets at a shared vertex
            for v in 0..n {
                let mut best: Option<(Cost, EdgeSeq)> = None;
                let mut sub = (mask - 1) & mask;
                while sub > 0 {
                    let rest = mask ^ sub;
                    if sub < rest {
                        if let (Some((ca, ea)), Some((cb, eb))) =
                            (&dp[sub * n + v], &dp[rest * n + v])
                        {
                            let cost = ca.saturating_add(*cb);
                            let worth = match &best {
                                None => true,
                                Some((c, _)) => cost <= *c,
                            };
                            if worth {
                                offer(&mut best, cost, seq_union(ea, eb));
                            }
                        }
                    }
                    sub = (sub - 1) & mask;
                }
                dp[mask * n + v] = best;
            }
        }
        // propagate along edges until nothing improves
        loop {
            let mut changed = false;
            for id in 0..graph.edge_count() {
                let e = graph.edge(id);
                for (from, to) in [(e.u, e.v), (e.v, e.u)] {
                    let Some((source_cost, _)) = &dp[mask * n + from] else {
                        continue;
                    };
                    let cost = source_cost.saturating_add(e.cost);
                    let worth = match &dp[mask * n + to] {
                        None => true,
                        Some((c, _)) => cost <= *c,
                    };
                    if worth {
                        let edges =
                            seq_with_edge(&dp[mask * n + from].as_ref().unwrap().1, id as u32);
                        changed |= offer(&mut dp[mask * n + to], cost, edges);
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }
    let (cost, edge_seq) = dp[full * n + terminals[0]]
        .clone()
        .expect("connected graph yields a finite state for every terminal subset");
    if cost == Cost::MAX {
        // saturation sentinel: the optimum does not fit in the cost type
        return Err(Error::Overflow("steiner tree cost"));
    }
    let tree = tree_from_edge_seq(graph, instance.terminals(), &edge_seq)?;
    assert_eq!(
        tree.total_cost(),
        cost,
        "reconstructed tree cost diverged from table value"
    );
    Ok(SolveResult {
        tree,
        optimal: true,
        method: SolveMethod::ExactDp,
    })
}

/// Builds a validated tree from a realized edge sequence, pruning
/// non-terminal leaves until none remain.
fn tree_from_edge_seq(
    graph: &Graph,
    terminals: &BTreeSet<VertexId>,
    seq: &[u32],
) -> Result<SteinerTree> {
    let mut edges: BTreeSet<EdgeId> = seq.iter().map(|&id| id as EdgeId).collect();
    loop {
        let mut degree = vec![0usize; graph.vertex_count()];
        for &id in &edges {
            let e = graph.edge(id);
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let removable: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|&id| {
                let e = graph.edge(id);
                [e.u, e.v]
                    .into_iter()
                    .any(|v| degree[v] == 1 && !terminals.contains(&v))
            })
            .collect();
        if removable.is_empty() {
            break;
        }
        for id in removable {
            edges.remove(&id);
        }
    }
    let mut vertices: BTreeSet<VertexId> = terminals.clone();
    for &id in &edges {
        let e = graph.edge(id);
        vertices.insert(e.u);
        vertices.insert(e.v);
    }
    SteinerTree::new(graph, vertices, edges)
}

/// Shortest-path growth heuristic: start from the lowest-index terminal and
/// repeatedly attach the nearest unconnected terminal along a shortest path.
///
/// Feasible but not necessarily minimum. Ties are broken toward the lowest
/// terminal index when choosing which terminal to attach and the lowest edge
/// id within paths.
pub fn solve_heuristic_stpg(instance: &StpgInstance) -> Result<SolveResult> {
    let graph = instance.graph();
    let mut terminal_iter = instance.terminals().iter().copied();
    let start = terminal_iter.next().expect("instance has terminals");
    let mut remaining: BTreeSet<VertexId> = terminal_iter.collect();
    let mut vertices = BTreeSet::from([start]);
    let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
    while !remaining.is_empty() {
        let sources: Vec<VertexId> = vertices.iter().copied().collect();
        let sp = dijkstra_multi(graph, &sources);
        let next = remaining
            .iter()
            .copied()
            .min_by_key(|&t| (sp.dist[t].expect("graph is connected"), t))
            .unwrap();
        let mut cursor = next;
        while !vertices.contains(&cursor) {
            let (prev, id) = sp.pred[cursor].expect("path back to the tree exists");
            vertices.insert(cursor);
            edges.insert(id);
            cursor = prev;
        }
        remaining.remove(&next);
    }
    let tree = SteinerTree::new(graph, vertices, edges)?;
    Ok(SolveResult {
        tree,
        optimal: false,
        method: SolveMethod::HeuristicSph,
    })
}

fn check_oracle_capacity(graph: &Graph) -> Result<()> {
    let n = graph.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(Error::Capacity {
            what: "oracle vertices",
            limit: ORACLE_VERTEX_LIMIT,
            actual: n,
        });
    }
    Ok(())
}

fn subset_of_mask(n: usize, mask: u32) -> BTreeSet<VertexId> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// Exhaustive Steiner tree oracle: minimize the induced-subgraph MST cost
/// over every vertex subset containing all terminals, in increasing bitmask
/// order. Correct because the optimal tree's own vertex set is enumerated
/// and its MST costs no more.
pub fn brute_force_smt(instance: &StpgInstance) -> Result<SolveResult> {
    let graph = instance.graph();
    check_oracle_capacity(graph)?;
    let n = graph.vertex_count();
    let terminal_mask: u32 = instance.terminals().iter().fold(0, |m, &t| m | 1 << t);
    let mut best: Option<SteinerTree> = None;
    for mask in 1u32..1 << n {
        if mask & terminal_mask != terminal_mask {
            continue;
        }
        if let Some(tree) = minimum_spanning_tree(graph, &subset_of_mask(n, mask))? {
            if best
                .as_ref()
                .is_none_or(|b| tree.total_cost() < b.total_cost())
            {
                best = Some(tree);
            }
        }
    }
    Ok(SolveResult {
        tree: best.expect("full vertex set of a connected graph spans"),
        optimal: true,
        method: SolveMethod::OracleStpg,
    })
}

/// Exhaustive group Steiner tree oracle: same subset-MST minimization, over
/// every vertex subset that intersects all groups.
pub fn brute_force_gsmt(instance: &GstpInstance) -> Result<SolveResult> {
    let graph = instance.graph();
    check_oracle_capacity(graph)?;
    let n = graph.vertex_count();
    let group_masks: Vec<u32> = instance
        .groups()
        .iter()
        .map(|g| g.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let mut best: Option<SteinerTree> = None;
    for mask in 1u32..1 << n {
        if group_masks.iter().any(|&g| g & mask == 0) {
            continue;
        }
        if let Some(tree) = minimum_spanning_tree(graph, &subset_of_mask(n, mask))? {
            if best
                .as_ref()
                .is_none_or(|b| tree.total_cost() < b.total_cost())
            {
                best = Some(tree);
            }
        }
    }
    Ok(SolveResult {
        tree: best.expect("groups are nonempty and the graph is connected"),
        optimal: true,
        method: SolveMethod::OracleGstp,
    })
}

/// Which Steiner solver a pipeline run applies to the reduced instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Exact,
    Heuristic,
    Oracle,
}

/// Costs observed while solving a group instance through the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub m_value: Cost,
    pub group_count: usize,
    pub reduced_cost: Cost,
}

/// A group Steiner tree on the original graph, with the reduction costs
/// when one was performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GstpSolution {
    pub tree: SteinerTree,
    pub reduction: Option<ReductionTrace>,
}

/// End-to-end pipeline: transform, solve the reduced Steiner instance with
/// the chosen solver, and strip the dummy edges from the answer.
///
/// A single-group instance short-circuits to the group's lowest vertex at
/// cost 0: its reduced instance has one terminal whose minimum tree is the
/// bare dummy vertex, which cannot be mapped back through `extract`.
pub fn solve_gstp_via_reduction(
    instance: &GstpInstance,
    solver: SolverKind,
) -> Result<GstpSolution> {
    if instance.group_count() == 1 {
        let v = *instance.groups()[0].iter().min().unwrap();
        return Ok(GstpSolution {
            tree: SteinerTree::single_vertex(instance.graph(), v)?,
            reduction: None,
        });
    }
    let reduced: ReducedInstance = transform(instance)?;
    let solved = match solver {
        SolverKind::Exact => solve_exact_stpg(reduced.stpg())?,
        SolverKind::Heuristic => solve_heuristic_stpg(reduced.stpg())?,
        SolverKind::Oracle => brute_force_smt(reduced.stpg())?,
    };
    let reduced_cost = solved.tree.total_cost();
    let tree = extract(&reduced, &solved.tree)?;
    Ok(GstpSolution {
        tree,
        reduction: Some(ReductionTrace {
            m_value: reduced.m_value(),
            group_count: reduced.group_count(),
            reduced_cost,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{gstp_is_feasible, stpg_is_feasible};

    /// triangle ab=1, bc=2, ac=4
    fn triangle() -> Graph {
        Graph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 4)]).unwrap()
    }

    fn stpg(graph: Graph, terminals: impl IntoIterator<Item = VertexId>) -> StpgInstance {
        StpgInstance::new(graph, terminals.into_iter().collect()).unwrap()
    }

    #[test]
    fn exact_single_terminal_is_free() {
        let inst = stpg(triangle(), [1]);
        let result = solve_exact_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 0);
        assert_eq!(result.tree.vertices(), &BTreeSet::from([1]));
        assert!(result.optimal);
        assert_eq!(result.method, SolveMethod::ExactDp);
    }

    #[test]
    fn exact_triangle_all_terminals_matches_mst() {
        let inst = stpg(triangle(), [0, 1, 2]);
        let result = solve_exact_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
        let oracle = brute_force_smt(&inst).unwrap();
        assert_eq!(oracle.tree.total_cost(), 3);
    }

    #[test]
    fn exact_path_uses_both_edges() {
        let path = Graph::new(3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let inst = stpg(path, [0, 2]);
        let result = solve_exact_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
        assert_eq!(result.tree.edges(), &BTreeSet::from([0, 1]));
    }

    #[test]
    fn exact_skips_detour_terminal_pair() {
        // terminals a, c on the triangle: direct edge costs 4, detour via b costs 3
        let inst = stpg(triangle(), [0, 2]);
        let result = solve_exact_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
        assert_eq!(result.tree.edges(), &BTreeSet::from([0, 1]));
    }

    #[test]
    fn exact_terminal_limit_is_enforced() {
        let path = Graph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        let inst = stpg(path, [0, 1, 2, 3]);
        assert!(matches!(
            solve_exact_stpg_with_limit(&inst, 3),
            Err(Error::Capacity {
                actual: 4,
                limit: 3,
                ..
            })
        ));
    }

    #[test]
    fn exact_tie_break_prefers_low_edge_ids() {
        // hand-reduced instance with tied optima: edge 0 joins x and y, three
        // dummies hang off them, and the all-dummy star through vertex 4
        // ties at cost 28 with the path-based trees
        let g = Graph::new(5, [(0, 1, 7), (2, 0, 7), (3, 1, 7), (4, 0, 7), (4, 1, 7)]).unwrap();
        let inst = stpg(g, [2, 3, 4]);
        let result = solve_exact_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 28);
        // lexicographically smallest optimum keeps every terminal a leaf
        assert_eq!(result.tree.edges(), &BTreeSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn solvers_are_deterministic() {
        let inst = stpg(triangle(), [0, 2]);
        assert_eq!(
            solve_exact_stpg(&inst).unwrap(),
            solve_exact_stpg(&inst).unwrap()
        );
        assert_eq!(
            solve_heuristic_stpg(&inst).unwrap(),
            solve_heuristic_stpg(&inst).unwrap()
        );
        assert_eq!(
            brute_force_smt(&inst).unwrap(),
            brute_force_smt(&inst).unwrap()
        );
        let gstp = GstpInstance::new(triangle(), vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(
            brute_force_gsmt(&gstp).unwrap(),
            brute_force_gsmt(&gstp).unwrap()
        );
    }

    #[test]
    fn heuristic_single_terminal_is_free() {
        let inst = stpg(triangle(), [2]);
        let result = solve_heuristic_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 0);
        assert!(!result.optimal);
        assert_eq!(result.method, SolveMethod::HeuristicSph);
    }

    #[test]
    fn heuristic_path_matches_exact() {
        let path = Graph::new(3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let inst = stpg(path, [0, 2]);
        let result = solve_heuristic_stpg(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
    }

    #[test]
    fn heuristic_is_feasible_and_dominated() {
        // 4-cycle with a costly chord: heuristic and exact may differ but
        // the heuristic is never cheaper
        let g = Graph::new(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 3, 3), (0, 2, 5)]).unwrap();
        for terminal_mask in 1u32..(1 << 4) {
            let terminals: BTreeSet<VertexId> =
                (0..4).filter(|v| terminal_mask >> v & 1 == 1).collect();
            let inst = StpgInstance::new(g.clone(), terminals).unwrap();
            let heuristic = solve_heuristic_stpg(&inst).unwrap();
            let exact = solve_exact_stpg(&inst).unwrap();
            assert!(stpg_is_feasible(&inst, &heuristic.tree).unwrap());
            assert!(heuristic.tree.total_cost() >= exact.tree.total_cost());
        }
    }

    #[test]
    fn oracle_smt_whole_vertex_set_is_mst() {
        let inst = stpg(triangle(), [0, 1, 2]);
        let result = brute_force_smt(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
        assert_eq!(result.method, SolveMethod::OracleStpg);
    }

    #[test]
    fn oracle_smt_triangle_detour() {
        // S = {a,c} costs 4, S = {a,b,c} costs 3
        let inst = stpg(triangle(), [0, 2]);
        let result = brute_force_smt(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 3);
        assert_eq!(result.tree.vertices(), &BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn oracle_agreement_exhaustive_small_graph() {
        let g = Graph::new(
            5,
            [
                (0, 1, 3),
                (1, 2, 1),
                (2, 3, 4),
                (3, 4, 2),
                (0, 4, 6),
                (1, 3, 5),
            ],
        )
        .unwrap();
        for terminal_mask in 1u32..(1 << 5) {
            let terminals: BTreeSet<VertexId> =
                (0..5).filter(|v| terminal_mask >> v & 1 == 1).collect();
            let inst = StpgInstance::new(g.clone(), terminals).unwrap();
            let exact = solve_exact_stpg(&inst).unwrap();
            let oracle = brute_force_smt(&inst).unwrap();
            assert_eq!(
                exact.tree.total_cost(),
                oracle.tree.total_cost(),
                "mask {terminal_mask}"
            );
        }
    }

    #[test]
    fn oracle_capacity_is_enforced() {
        let edges: Vec<(usize, usize, Cost)> = (0..15).map(|i| (i, i + 1, 1)).collect();
        let g = Graph::new(16, edges).unwrap();
        let inst = stpg(g, [0, 15]);
        assert!(matches!(
            brute_force_smt(&inst),
            Err(Error::Capacity {
                actual: 16,
                limit: 15,
                ..
            })
        ));
    }

    #[test]
    fn oracle_gsmt_shared_vertex_costs_nothing() {
        let inst = GstpInstance::new(triangle(), vec![vec![0, 1], vec![0, 2]]).unwrap();
        let result = brute_force_gsmt(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 0);
        assert_eq!(result.method, SolveMethod::OracleGstp);
    }

    #[test]
    fn oracle_gsmt_triangle_example() {
        // subsets hitting both groups: {a,b} costs 1, {a,c} costs 4, {a,b,c} costs 3
        let inst = GstpInstance::new(triangle(), vec![vec![0], vec![1, 2]]).unwrap();
        let result = brute_force_gsmt(&inst).unwrap();
        assert_eq!(result.tree.total_cost(), 1);
        assert_eq!(result.tree.edges(), &BTreeSet::from([0]));
        assert!(gstp_is_feasible(&inst, &result.tree).unwrap());
    }

    #[test]
    fn oracle_gsmt_degenerates_to_smt_on_singleton_groups() {
        let g = Graph::new(4, [(0, 1, 2), (1, 2, 3), (2, 3, 1), (0, 3, 7)]).unwrap();
        let gstp = GstpInstance::new(g.clone(), vec![vec![0], vec![2], vec![3]]).unwrap();
        let stpg = StpgInstance::new(g, BTreeSet::from([0, 2, 3])).unwrap();
        assert_eq!(
            brute_force_gsmt(&gstp).unwrap().tree.total_cost(),
            brute_force_smt(&stpg).unwrap().tree.total_cost()
        );
    }

    #[test]
    fn pipeline_triangle_instance() {
        let inst = GstpInstance::new(triangle(), vec![vec![0], vec![1, 2]]).unwrap();
        let solution = solve_gstp_via_reduction(&inst, SolverKind::Exact).unwrap();
        assert_eq!(solution.tree.total_cost(), 1);
        assert!(gstp_is_feasible(&inst, &solution.tree).unwrap());
        let trace = solution.reduction.unwrap();
        assert_eq!(trace.m_value, 7);
        assert_eq!(trace.group_count, 2);
        assert_eq!(trace.reduced_cost, 15);
    }

    #[test]
    fn pipeline_single_group_short_circuits() {
        let inst = GstpInstance::new(triangle(), vec![vec![2, 1]]).unwrap();
        let solution = solve_gstp_via_reduction(&inst, SolverKind::Exact).unwrap();
        assert_eq!(solution.tree.total_cost(), 0);
        assert_eq!(solution.tree.vertices(), &BTreeSet::from([1]));
        assert!(solution.reduction.is_none());
    }

    #[test]
    fn pipeline_modes_agree_on_cost_here() {
        let inst = GstpInstance::new(triangle(), vec![vec![0], vec![1, 2]]).unwrap();
        for kind in [SolverKind::Exact, SolverKind::Oracle] {
            let solution = solve_gstp_via_reduction(&inst, kind).unwrap();
            assert_eq!(solution.tree.total_cost(), 1);
        }
        let heuristic = solve_gstp_via_reduction(&inst, SolverKind::Heuristic).unwrap();
        assert!(heuristic.tree.total_cost() >= 1);
        assert!(gstp_is_feasible(&inst, &heuristic.tree).unwrap());
    }
}
