//! Group Steiner tree problems solved as Steiner tree problems.
//!
//! The crate reduces a group Steiner instance to a classical Steiner
//! instance by adding one compulsory dummy vertex per group, connected to
//! every member of that group by an edge of cost M, the sum of all original
//! edge costs. Solving the reduced instance and stripping the dummy edges
//! recovers an optimal group Steiner tree whose cost is exactly the reduced
//! optimum minus M times the group count.
//!
//! Modules:
//! - [`graph`]: undirected weighted graphs, trees, shortest paths, MST.
//! - [`instance`]: the two problem types and their feasibility predicates.
//! - [`format`]: sectioned text formats for both problem types.
//! - [`reduction`]: the transformation and its inverse.
//! - [`solvers`]: exact, heuristic, and exhaustive-oracle Steiner solvers.
//! - [`verify`]: seeded instance generation plus the campaign runner that
//!   checks the reduction's cost identity and leaf property empirically.

pub mod error;
pub mod format;
pub mod graph;
pub mod instance;
pub mod reduction;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use format::{parse_gstp, parse_stpg, render_gstp, render_stpg};
pub use graph::{Cost, Edge, EdgeId, Graph, SteinerTree, VertexId};
pub use instance::{gstp_is_feasible, stpg_is_feasible, GstpInstance, StpgInstance};
pub use reduction::{augment_with_dummy_leaves, extract, transform, ReducedInstance};
pub use solvers::{
    brute_force_gsmt, brute_force_smt, solve_exact_stpg, solve_gstp_via_reduction,
    solve_heuristic_stpg, GstpSolution, SolveMethod, SolveResult, SolverKind,
};
pub use verify::{
    generate_instance, run_campaign, verify_instance, CampaignReport, GenParams, InstanceRecord,
    DEFAULT_SEED,
};
