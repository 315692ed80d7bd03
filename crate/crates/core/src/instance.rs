//! Problem instances: Steiner tree (compulsory vertices) and group Steiner
//! tree (vertex groups), with their feasibility predicates.

use crate::error::{Error, Result};
use crate::graph::{Graph, SteinerTree, VertexId};
use std::collections::BTreeSet;

/// Steiner tree problem instance: a connected graph plus a nonempty set of
/// compulsory vertices that every feasible tree must contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StpgInstance {
    graph: Graph,
    terminals: BTreeSet<VertexId>,
}

impl StpgInstance {
    pub fn new(graph: Graph, terminals: BTreeSet<VertexId>) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if terminals.is_empty() {
            return Err(Error::InvalidArgument(
                "terminal set must be nonempty".into(),
            ));
        }
        for &t in &terminals {
            if t >= graph.vertex_count() {
                return Err(Error::InvalidArgument(format!("terminal {t} out of range")));
            }
        }
        Ok(StpgInstance { graph, terminals })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &BTreeSet<VertexId> {
        &self.terminals
    }
}

/// Group Steiner tree problem instance: a connected graph plus an ordered
/// list of nonempty vertex groups. A feasible tree must intersect every
/// group. Groups may overlap or repeat; their order is preserved because it
/// names the dummy vertices added by the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GstpInstance {
    graph: Graph,
    groups: Vec<Vec<VertexId>>,
}

impl GstpInstance {
    pub fn new(graph: Graph, groups: Vec<Vec<VertexId>>) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if groups.is_empty() {
            return Err(Error::InvalidArgument("group list must be nonempty".into()));
        }
        for (i, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(Error::InvalidArgument(format!("group {i} is empty")));
            }
            let mut seen = BTreeSet::new();
            for &v in group {
                if v >= graph.vertex_count() {
                    return Err(Error::InvalidArgument(format!(
                        "group {i} member {v} out of range"
                    )));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidArgument(format!(
                        "group {i} contains vertex {v} twice"
                    )));
                }
            }
        }
        Ok(GstpInstance { graph, groups })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn groups(&self) -> &[Vec<VertexId>] {
        &self.groups
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }
}

/// True iff `tree` contains every compulsory vertex of `instance`.
pub fn stpg_is_feasible(instance: &StpgInstance, tree: &SteinerTree) -> Result<bool> {
    tree.validate(instance.graph())?;
    Ok(instance
        .terminals()
        .iter()
        .all(|t| tree.contains_vertex(*t)))
}

/// True iff `tree` intersects every group of `instance`.
pub fn gstp_is_feasible(instance: &GstpInstance, tree: &SteinerTree) -> Result<bool> {
    tree.validate(instance.graph())?;
    Ok(instance
        .groups()
        .iter()
        .all(|g| g.iter().any(|v| tree.contains_vertex(*v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        // a-b-c with costs 1, 2
        Graph::new(3, [(0, 1, 1), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn stpg_construction_checks_invariants() {
        let disconnected = Graph::new(2, []).unwrap();
        assert_eq!(
            StpgInstance::new(disconnected, BTreeSet::from([0])),
            Err(Error::Disconnected)
        );
        assert!(StpgInstance::new(path3(), BTreeSet::new()).is_err());
        assert!(StpgInstance::new(path3(), BTreeSet::from([3])).is_err());
        assert!(StpgInstance::new(path3(), BTreeSet::from([0, 2])).is_ok());
    }

    #[test]
    fn gstp_construction_checks_invariants() {
        assert!(GstpInstance::new(path3(), vec![]).is_err());
        assert!(GstpInstance::new(path3(), vec![vec![]]).is_err());
        assert!(GstpInstance::new(path3(), vec![vec![0, 0]]).is_err());
        assert!(GstpInstance::new(path3(), vec![vec![0, 3]]).is_err());
        // overlapping and repeated groups are allowed
        let inst = GstpInstance::new(path3(), vec![vec![0, 1], vec![0, 1], vec![0]]).unwrap();
        assert_eq!(inst.group_count(), 3);
    }

    #[test]
    fn stpg_feasibility() {
        let g = path3();
        let single = SteinerTree::single_vertex(&g, 0).unwrap();
        let inst = StpgInstance::new(g.clone(), BTreeSet::from([0])).unwrap();
        assert!(stpg_is_feasible(&inst, &single).unwrap());

        let both_edges =
            SteinerTree::new(&g, BTreeSet::from([0, 1, 2]), BTreeSet::from([0, 1])).unwrap();
        let inst = StpgInstance::new(g.clone(), BTreeSet::from([0, 2])).unwrap();
        assert!(stpg_is_feasible(&inst, &both_edges).unwrap());

        let first_edge = SteinerTree::new(&g, BTreeSet::from([0, 1]), BTreeSet::from([0])).unwrap();
        assert!(!stpg_is_feasible(&inst, &first_edge).unwrap());
    }

    #[test]
    fn gstp_feasibility() {
        let g = path3();
        let first_edge = SteinerTree::new(&g, BTreeSet::from([0, 1]), BTreeSet::from([0])).unwrap();
        let inst = GstpInstance::new(g.clone(), vec![vec![0], vec![1, 2]]).unwrap();
        assert!(gstp_is_feasible(&inst, &first_edge).unwrap());

        let single = SteinerTree::single_vertex(&g, 0).unwrap();
        assert!(!gstp_is_feasible(&inst, &single).unwrap());

        // overlapping groups share the hit vertex
        let overlap = GstpInstance::new(g.clone(), vec![vec![0], vec![0]]).unwrap();
        assert!(gstp_is_feasible(&overlap, &single).unwrap());
    }

    #[test]
    fn feasibility_rejects_foreign_trees() {
        let g = path3();
        let bigger = Graph::new(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let foreign =
            SteinerTree::new(&bigger, BTreeSet::from([2, 3]), BTreeSet::from([2])).unwrap();
        let inst = StpgInstance::new(g, BTreeSet::from([0])).unwrap();
        assert!(stpg_is_feasible(&inst, &foreign).is_err());
    }

    #[test]
    fn whole_graph_tree_is_always_gstp_feasible() {
        let g = path3();
        let all = SteinerTree::new(&g, BTreeSet::from([0, 1, 2]), BTreeSet::from([0, 1])).unwrap();
        let inst = GstpInstance::new(g.clone(), vec![vec![2], vec![1], vec![0, 2]]).unwrap();
        assert!(gstp_is_feasible(&inst, &all).unwrap());
    }
}
