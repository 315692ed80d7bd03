//! Property tests over seeded random instances.

use gsteiner::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn small_params(seed: u64) -> GenParams {
    GenParams::new((2, 8), 0.35, (1, 12), (2, 3), (1, 2), seed).unwrap()
}

/// Steiner instance derived from a group instance: the first member of
/// every group becomes a terminal.
fn derived_stpg(gstp: &GstpInstance) -> StpgInstance {
    let terminals: BTreeSet<VertexId> = gstp.groups().iter().map(|g| g[0]).collect();
    StpgInstance::new(gstp.graph().clone(), terminals).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reduction_identity_leafness_extraction(seed in any::<u64>(), index in 0usize..64) {
        let inst = generate_instance(&small_params(seed), index);
        let record = verify_instance(&inst).unwrap();
        prop_assert!(record.identity_holds);
        prop_assert!(record.all_dummies_leaves);
        prop_assert!(record.extraction_feasible);
    }

    #[test]
    fn exact_solver_agrees_with_oracle(seed in any::<u64>(), index in 0usize..64) {
        let inst = derived_stpg(&generate_instance(&small_params(seed), index));
        let exact = solve_exact_stpg(&inst).unwrap();
        let oracle = brute_force_smt(&inst).unwrap();
        prop_assert!(stpg_is_feasible(&inst, &exact.tree).unwrap());
        prop_assert_eq!(exact.tree.total_cost(), oracle.tree.total_cost());
    }

    #[test]
    fn heuristic_is_feasible_and_never_cheaper(seed in any::<u64>(), index in 0usize..64) {
        let inst = derived_stpg(&generate_instance(&small_params(seed), index));
        let heuristic = solve_heuristic_stpg(&inst).unwrap();
        let exact = solve_exact_stpg(&inst).unwrap();
        prop_assert!(stpg_is_feasible(&inst, &heuristic.tree).unwrap());
        prop_assert!(heuristic.tree.total_cost() >= exact.tree.total_cost());
    }

    #[test]
    fn augmented_oracle_tree_bounds_reduced_optimum(seed in any::<u64>(), index in 0usize..64) {
        let inst = generate_instance(&small_params(seed), index);
        let oracle = brute_force_gsmt(&inst).unwrap();
        let reduced = transform(&inst).unwrap();
        let lifted = augment_with_dummy_leaves(&reduced, &oracle.tree).unwrap();
        prop_assert!(stpg_is_feasible(reduced.stpg(), &lifted).unwrap());
        let lift = reduced.m_value() * reduced.group_count() as Cost;
        prop_assert_eq!(lifted.total_cost(), oracle.tree.total_cost() + lift);
        let exact = solve_exact_stpg(reduced.stpg()).unwrap();
        prop_assert!(lifted.total_cost() >= exact.tree.total_cost());
        // round trip back down
        prop_assert_eq!(extract(&reduced, &lifted).unwrap(), oracle.tree);
    }

    #[test]
    fn formats_round_trip(seed in any::<u64>(), index in 0usize..64) {
        let gstp = generate_instance(&small_params(seed), index);
        prop_assert_eq!(&parse_gstp(&render_gstp(&gstp)).unwrap(), &gstp);
        let stpg = derived_stpg(&gstp);
        prop_assert_eq!(&parse_stpg(&render_stpg(&stpg)).unwrap(), &stpg);
    }

    #[test]
    fn shortest_paths_satisfy_edge_triangle_inequality(seed in any::<u64>(), index in 0usize..64) {
        let graph = generate_instance(&small_params(seed), index).graph().clone();
        let sp = graph::shortest_paths(&graph, 0);
        for e in graph.edges() {
            let du = sp.dist[e.u].unwrap();
            let dv = sp.dist[e.v].unwrap();
            prop_assert!(du + e.cost >= dv);
            prop_assert!(dv + e.cost >= du);
        }
    }

    #[test]
    fn solver_outputs_validate_everywhere(seed in any::<u64>(), index in 0usize..64) {
        let gstp = generate_instance(&small_params(seed), index);
        let stpg = derived_stpg(&gstp);
        for result in [
            solve_exact_stpg(&stpg).unwrap(),
            solve_heuristic_stpg(&stpg).unwrap(),
            brute_force_smt(&stpg).unwrap(),
        ] {
            result.tree.validate(stpg.graph()).unwrap();
            prop_assert!(stpg_is_feasible(&stpg, &result.tree).unwrap());
        }
        let gsmt = brute_force_gsmt(&gstp).unwrap();
        gsmt.tree.validate(gstp.graph()).unwrap();
        prop_assert!(gstp_is_feasible(&gstp, &gsmt.tree).unwrap());
    }
}
