//! Undirected weighted graph primitives used by every other module.
//!
//! Vertices are dense 0-based indices. Edge costs are strictly positive
//! integers; aggregates (tree cost, the reduction's M value) use the same
//! `u64` representation with overflow always detected, never wrapped.

use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

/// Dense 0-based vertex identifier, valid for exactly one owning graph.
pub type VertexId = usize;

/// Exact non-negative integer cost. Individual edge costs are >= 1;
/// aggregates (tree cost, M) may be 0.
pub type Cost = u64;

/// Index of an edge into its owning graph's edge list.
pub type EdgeId = usize;

/// One undirected edge with a strictly positive cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub cost: Cost,
}

impl Edge {
    /// The endpoint that is not `from`. Panics if `from` is not an endpoint.
    pub fn other(&self, from: VertexId) -> VertexId {
        if from == self.u {
            self.v
        } else {
            debug_assert_eq!(from, self.v);
            self.u
        }
    }
}

/// Immutable undirected graph: no self-loops, no parallel edges.
///
/// Adjacency lists hold `(neighbor, edge id)` pairs in increasing edge-id
/// order, which every tie-breaking rule in this crate relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Cost)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidArgument(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut edge_list = Vec::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for (u, v, cost) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if cost == 0 {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) has zero cost"
                )));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidArgument(format!("parallel edge ({u}, {v})")));
            }
            let id = edge_list.len();
            edge_list.push(Edge { u, v, cost });
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            vertex_count,
            edges: edge_list,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Neighbors of `v` as `(neighbor, edge id)`, in increasing edge-id order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Exact sum of all edge costs (the reduction's M value); 0 when edgeless.
    pub fn total_cost(&self) -> Result<Cost> {
        let mut sum: Cost = 0;
        for e in &self.edges {
            sum = sum
                .checked_add(e.cost)
                .ok_or(Error::Overflow("total edge cost"))?;
        }
        Ok(sum)
    }
}

/// Single-source shortest path distances and predecessors.
///
/// `dist[v]` is `None` for unreachable vertices. `pred[v]` reconstructs one
/// shortest path per vertex; on equal distances the incoming edge with the
/// lowest id wins, so paths are reproducible.
#[derive(Debug, Clone)]
pub struct ShortestPaths {
    pub dist: Vec<Option<Cost>>,
    pub pred: Vec<Option<(VertexId, EdgeId)>>,
}

pub fn shortest_paths(graph: &Graph, source: VertexId) -> ShortestPaths {
    assert!(source < graph.vertex_count(), "source out of range");
    dijkstra_multi(graph, &[source])
}

/// Dijkstra from a set of zero-distance sources. Heap entries pop in
/// (distance, vertex) order; predecessor ties go to the lowest edge id.
pub(crate) fn dijkstra_multi(graph: &Graph, sources: &[VertexId]) -> ShortestPaths {
    let n = graph.vertex_count();
    let mut dist: Vec<Option<Cost>> = vec![None; n];
    let mut pred: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(Cost, VertexId)>> = BinaryHeap::new();
    for &s in sources {
        dist[s] = Some(0);
        heap.push(Reverse((0, s)));
    }
    while let Some(Reverse((d, v))) = heap.pop() {
        if settled[v] {
            continue;
        }
        settled[v] = true;
        for &(w, id) in graph.neighbors(v) {
            let nd = d.saturating_add(graph.edge(id).cost);
            match dist[w] {
                Some(cur) if nd > cur => {}
                Some(cur) if nd == cur => {
                    // equal distance: keep the lowest incoming edge id
                    if let Some((_, cur_id)) = pred[w] {
                        if id < cur_id {
                            pred[w] = Some((v, id));
                        }
                    }
                }
                _ => {
                    dist[w] = Some(nd);
                    pred[w] = Some((v, id));
                    heap.push(Reverse((nd, w)));
                }
            }
        }
    }
    ShortestPaths { dist, pred }
}

/// A subset of a graph's vertices and edges forming a tree, with its exact
/// total cost. Plays the role of both Steiner trees and group Steiner trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerTree {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
    total_cost: Cost,
}

impl SteinerTree {
    /// Builds and validates a tree over `graph`: edge endpoints must lie in
    /// `vertices`, the edges must form a spanning tree of `vertices`, and
    /// the cost is the exact edge-cost sum (0 for a single vertex).
    pub fn new(
        graph: &Graph,
        vertices: BTreeSet<VertexId>,
        edges: BTreeSet<EdgeId>,
    ) -> Result<Self> {
        let mut total: Cost = 0;
        for &id in &edges {
            if id >= graph.edge_count() {
                return Err(Error::InvalidArgument(format!("edge id {id} out of range")));
            }
            total = total
                .checked_add(graph.edge(id).cost)
                .ok_or(Error::Overflow("tree cost"))?;
        }
        let tree = SteinerTree {
            vertices,
            edges,
            total_cost: total,
        };
        tree.validate(graph)?;
        Ok(tree)
    }

    /// Convenience constructor for the zero-cost one-vertex tree.
    pub fn single_vertex(graph: &Graph, v: VertexId) -> Result<Self> {
        SteinerTree::new(graph, BTreeSet::from([v]), BTreeSet::new())
    }

    /// Checks every type invariant against the owning graph.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidArgument("tree has no vertices".into()));
        }
        for &v in &self.vertices {
            if v >= graph.vertex_count() {
                return Err(Error::InvalidArgument(format!(
                    "tree vertex {v} out of range"
                )));
            }
        }
        let mut cost: Cost = 0;
        for &id in &self.edges {
            if id >= graph.edge_count() {
                return Err(Error::InvalidArgument(format!(
                    "tree edge id {id} out of range"
                )));
            }
            let e = graph.edge(id);
            if !self.vertices.contains(&e.u) || !self.vertices.contains(&e.v) {
                return Err(Error::InvalidArgument(format!(
                    "tree edge {id} has an endpoint outside the vertex set"
                )));
            }
            cost = cost
                .checked_add(e.cost)
                .ok_or(Error::Overflow("tree cost"))?;
        }
        if cost != self.total_cost {
            return Err(Error::InvalidArgument(format!(
                "tree cost {} does not match edge sum {cost}",
                self.total_cost
            )));
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "{} edges cannot span {} vertices",
                self.edges.len(),
                self.vertices.len()
            )));
        }
        // connectivity over the member vertices only
        let start = *self.vertices.iter().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, id) in graph.neighbors(v) {
                if self.edges.contains(&id) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != self.vertices.len() {
            return Err(Error::InvalidArgument("tree is not connected".into()));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn total_cost(&self) -> Cost {
        self.total_cost
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Number of tree edges incident to `v`.
    pub fn degree_of(&self, graph: &Graph, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&id| {
                let e = graph.edge(id);
                e.u == v || e.v == v
            })
            .count()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Minimum spanning tree of the subgraph induced by `vertex_subset`.
///
/// Returns `Ok(None)` when the induced subgraph is disconnected. A singleton
/// subset yields the zero-cost one-vertex tree. Kruskal with edges ordered by
/// (cost, edge id), so ties go to the lowest edge id.
pub fn minimum_spanning_tree(
    graph: &Graph,
    vertex_subset: &BTreeSet<VertexId>,
) -> Result<Option<SteinerTree>> {
    if vertex_subset.is_empty() {
        return Err(Error::InvalidArgument(
            "vertex subset must be nonempty".into(),
        ));
    }
    for &v in vertex_subset {
        if v >= graph.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "subset vertex {v} out of range"
            )));
        }
    }
    if vertex_subset.len() == 1 {
        let v = *vertex_subset.iter().next().unwrap();
        return Ok(Some(SteinerTree::single_vertex(graph, v)?));
    }
    let mut candidates: Vec<EdgeId> = (0..graph.edge_count())
        .filter(|&id| {
            let e = graph.edge(id);
            vertex_subset.contains(&e.u) && vertex_subset.contains(&e.v)
        })
        .collect();
    candidates.sort_by_key(|&id| (graph.edge(id).cost, id));

    // rank vertices densely for the union-find
    let rank: std::collections::HashMap<VertexId, usize> = vertex_subset
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut uf = UnionFind::new(vertex_subset.len());
    let mut chosen = BTreeSet::new();
    for id in candidates {
        let e = graph.edge(id);
        if uf.union(rank[&e.u], rank[&e.v]) {
            chosen.insert(id);
            if chosen.len() + 1 == vertex_subset.len() {
                break;
            }
        }
    }
    if chosen.len() + 1 != vertex_subset.len() {
        return Ok(None);
    }
    Ok(Some(SteinerTree::new(
        graph,
        vertex_subset.clone(),
        chosen,
    )?))
}
