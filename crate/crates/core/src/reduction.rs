//! Reduction from the group Steiner tree problem to the Steiner tree
//! problem, and its inverse.
//!
//! `transform` attaches one dummy compulsory vertex per group, joined to
//! every member of that group by an edge of cost M, where M is the sum of
//! all original edge costs. Solving the reduced Steiner instance and
//! stripping the dummy edges with `extract` recovers a group Steiner tree:
//! the minimum tree of the reduced instance keeps every dummy vertex at
//! degree 1, and its cost exceeds the group Steiner optimum by exactly
//! M times the group count.

use crate::error::{Error, Result};
use crate::graph::{Cost, EdgeId, Graph, SteinerTree, VertexId};
use crate::instance::{GstpInstance, StpgInstance};
use std::collections::BTreeSet;

/// The Steiner instance produced by `transform`, plus the bookkeeping
/// needed to invert the reduction.
///
/// Original vertices and edges keep their indices. Dummy vertices occupy
/// indices `original_vertex_count..original_vertex_count + k` in group
/// order, and dummy edges follow the original edges, in member order
/// within each group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    stpg: StpgInstance,
    m_value: Cost,
    dummy_of_group: Vec<VertexId>,
    dummy_edge_indices: BTreeSet<EdgeId>,
    original_vertex_count: usize,
    original_edge_count: usize,
}

impl ReducedInstance {
    pub fn stpg(&self) -> &StpgInstance {
        &self.stpg
    }

    /// The reduction's large edge cost: the sum of all original edge costs.
    pub fn m_value(&self) -> Cost {
        self.m_value
    }

    /// Dummy vertex of each group, in group order.
    pub fn dummy_of_group(&self) -> &[VertexId] {
        &self.dummy_of_group
    }

    pub fn dummy_edge_indices(&self) -> &BTreeSet<EdgeId> {
        &self.dummy_edge_indices
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertex_count
    }

    pub fn original_edge_count(&self) -> usize {
        self.original_edge_count
    }

    pub fn group_count(&self) -> usize {
        self.dummy_of_group.len()
    }

    fn is_dummy_vertex(&self, v: VertexId) -> bool {
        v >= self.original_vertex_count
    }

    fn is_dummy_edge(&self, id: EdgeId) -> bool {
        id >= self.original_edge_count
    }
}

/// Builds the reduced Steiner instance for a group Steiner instance.
///
/// Deterministic: dummy vertices are appended in group order and dummy
/// edges in member order within each group. Fails if the original graph
/// has no edges (M would be 0, which is not a valid edge cost) or if
/// `M * (k + 1)` is not representable, which downstream identity checks
/// need.
pub fn transform(instance: &GstpInstance) -> Result<ReducedInstance> {
    let graph = instance.graph();
    let n = graph.vertex_count();
    let m_value = graph.total_cost()?;
    if m_value == 0 {
        return Err(Error::InvalidArgument(
            "graph has no edges, so the dummy edge cost M would be 0".into(),
        ));
    }
    let k = instance.group_count();
    m_value
        .checked_mul(k as Cost + 1)
        .ok_or(Error::Overflow("M * (group count + 1)"))?;

    let mut edges: Vec<(VertexId, VertexId, Cost)> =
        graph.edges().iter().map(|e| (e.u, e.v, e.cost)).collect();
    let mut dummy_of_group = Vec::with_capacity(k);
    for (i, group) in instance.groups().iter().enumerate() {
        let dummy = n + i;
        dummy_of_group.push(dummy);
        for &member in group {
            edges.push((dummy, member, m_value));
        }
    }
    let original_edge_count = graph.edge_count();
    let dummy_edge_indices: BTreeSet<EdgeId> = (original_edge_count..edges.len()).collect();

    let reduced_graph = Graph::new(n + k, edges)?;
    let terminals: BTreeSet<VertexId> = dummy_of_group.iter().copied().collect();
    let stpg = StpgInstance::new(reduced_graph, terminals)?;
    Ok(ReducedInstance {
        stpg,
        m_value,
        dummy_of_group,
        dummy_edge_indices,
        original_vertex_count: n,
        original_edge_count,
    })
}

/// Strips dummy vertices and edges from a feasible tree on the reduced
/// instance, recovering a tree on the original graph.
///
/// Every dummy vertex must be a leaf of `tree`; otherwise removing its
/// edges would disconnect the remainder and the cost identity would fail,
/// so a `NonLeafDummy` error names the first offender. When all groups
/// share one vertex the result may be a single-vertex, zero-edge tree.
pub fn extract(reduced: &ReducedInstance, tree: &SteinerTree) -> Result<SteinerTree> {
    let graph = reduced.stpg().graph();
    tree.validate(graph)?;
    for &dummy in reduced.dummy_of_group() {
        if !tree.contains_vertex(dummy) {
            return Err(Error::InvalidArgument(format!(
                "tree does not contain dummy terminal {dummy}"
            )));
        }
    }
    for &dummy in reduced.dummy_of_group() {
        if tree.degree_of(graph, dummy) >= 2 {
            return Err(Error::NonLeafDummy { dummy });
        }
    }
    let vertices: BTreeSet<VertexId> = tree
        .vertices()
        .iter()
        .copied()
        .filter(|&v| !reduced.is_dummy_vertex(v))
        .collect();
    if vertices.is_empty() {
        return Err(Error::InvalidArgument(
            "stripping dummy vertices leaves an empty tree (single-group reduced instance)".into(),
        ));
    }
    let edges: BTreeSet<EdgeId> = tree
        .edges()
        .iter()
        .copied()
        .filter(|&id| !reduced.is_dummy_edge(id))
        .collect();
    // indices of original vertices and edges are unchanged by the
    // reduction, so the stripped tree is valid on the original graph
    SteinerTree::new(graph, vertices, edges)
}

/// Lifts a feasible group Steiner tree on the original graph to a feasible
/// tree on the reduced instance by attaching each dummy vertex to the first
/// group member (in member order) the tree contains.
///
/// The result costs exactly `tree cost + M * k`, which bounds the reduced
/// optimum from above. Inverse of `extract` on trees it produces.
pub fn augment_with_dummy_leaves(
    reduced: &ReducedInstance,
    tree: &SteinerTree,
) -> Result<SteinerTree> {
    let graph = reduced.stpg().graph();
    tree.validate(graph)?;
    if let Some(&v) = tree
        .vertices()
        .iter()
        .find(|&&v| reduced.is_dummy_vertex(v))
    {
        return Err(Error::InvalidArgument(format!(
            "tree already contains dummy vertex {v}"
        )));
    }
    let mut vertices = tree.vertices().clone();
    let mut edges = tree.edges().clone();
    for &dummy in reduced.dummy_of_group() {
        // the dummy's adjacency lists its group's members in member order
        let (_, edge_id) = graph
            .neighbors(dummy)
            .iter()
            .find(|(member, _)| tree.contains_vertex(*member))
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "tree misses every member of the group behind dummy {dummy}"
                ))
            })?;
        vertices.insert(dummy);
        edges.insert(*edge_id);
    }
    SteinerTree::new(graph, vertices, edges)
}
