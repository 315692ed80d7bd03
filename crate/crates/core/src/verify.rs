//! Seeded random instance generation and the empirical reduction checker.
//!
//! For each generated group Steiner instance the checker computes the
//! brute-force group optimum, runs the reduction pipeline with the exact
//! solver, and records whether the cost identity
//! `gsmt = smt - M * group_count` holds exactly, whether every dummy vertex
//! is a leaf of the reduced optimum, and whether stripping the dummy edges
//! returns a feasible tree of exactly the group optimum's cost.

use crate::error::{Error, Result};
use crate::graph::{Cost, Graph, VertexId};
use crate::instance::{gstp_is_feasible, GstpInstance};
use crate::reduction::{extract, transform};
use crate::solvers::{brute_force_gsmt, solve_exact_stpg, solve_heuristic_stpg};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Default campaign seed, used by the command-line tool when none is given.
pub const DEFAULT_SEED: u64 = 1729;

/// Parameters of the random instance generator. All intervals are
/// inclusive. Instances are fully determined by `(seed, index)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    vertex_range: (usize, usize),
    edge_density: f64,
    cost_range: (Cost, Cost),
    group_count_range: (usize, usize),
    group_size_range: (usize, usize),
    seed: u64,
}

impl GenParams {
    /// Validates every interval: vertices start at 2 (a smaller graph has no
    /// edges and therefore no valid dummy edge cost), costs at 1, group
    /// count at 2 (the single-group pipeline bypasses the reduction).
    pub fn new(
        vertex_range: (usize, usize),
        edge_density: f64,
        cost_range: (Cost, Cost),
        group_count_range: (usize, usize),
        group_size_range: (usize, usize),
        seed: u64,
    ) -> Result<Self> {
        fn check_interval<T: PartialOrd + std::fmt::Debug>(
            name: &str,
            (lo, hi): (T, T),
            min: T,
        ) -> Result<()> {
            if lo > hi {
                return Err(Error::InvalidArgument(format!(
                    "{name} interval {lo:?}..{hi:?} is empty"
                )));
            }
            if lo < min {
                return Err(Error::InvalidArgument(format!(
                    "{name} minimum must be at least {min:?}"
                )));
            }
            Ok(())
        }
        check_interval("vertex count", vertex_range, 2)?;
        check_interval("edge cost", cost_range, 1)?;
        check_interval("group count", group_count_range, 2)?;
        check_interval("group size", group_size_range, 1)?;
        if !(0.0..=1.0).contains(&edge_density) {
            return Err(Error::InvalidArgument(format!(
                "edge density {edge_density} is not in [0, 1]"
            )));
        }
        Ok(GenParams {
            vertex_range,
            edge_density,
            cost_range,
            group_count_range,
            group_size_range,
            seed,
        })
    }

    /// The desk-scale defaults: 2..=10 vertices, density 0.3, costs 1..=20,
    /// 2..=4 groups of 1..=3 vertices.
    pub fn default_campaign(seed: u64) -> Self {
        GenParams::new((2, 10), 0.3, (1, 20), (2, 4), (1, 3), seed).unwrap()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn vertex_range(&self) -> (usize, usize) {
        self.vertex_range
    }

    pub fn edge_density(&self) -> f64 {
        self.edge_density
    }

    pub fn cost_range(&self) -> (Cost, Cost) {
        self.cost_range
    }

    pub fn group_count_range(&self) -> (usize, usize) {
        self.group_count_range
    }

    pub fn group_size_range(&self) -> (usize, usize) {
        self.group_size_range
    }
}

/// Uniform draw from `lo..=hi` using the raw ChaCha stream, so results
/// depend only on the cipher and not on any distribution implementation.
fn draw(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    debug_assert!(lo <= hi);
    let span = hi.wrapping_sub(lo).wrapping_add(1);
    if span == 0 {
        return rng.next_u64();
    }
    lo + rng.next_u64() % span
}

/// First `count` positions of a partial Fisher-Yates shuffle of `0..n`.
fn sample_distinct(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<VertexId> {
    debug_assert!(count <= n);
    let mut pool: Vec<VertexId> = (0..n).collect();
    for i in 0..count {
        let pick = i + draw(rng, 0, (n - i - 1) as u64) as usize;
        pool.swap(i, pick);
    }
    pool.truncate(count);
    pool
}

/// Generates the instance at `index`: a uniform random recursive tree
/// backbone (guaranteeing connectivity), extra edges sampled per vertex
/// pair with probability `edge_density`, uniform costs, then groups sampled
/// without replacement. Draw order is fixed: vertex count, backbone
/// parents, extra-edge coins in (u, v) order, edge costs in edge order,
/// group count, then each group's size and members.
pub fn generate_instance(params: &GenParams, index: usize) -> GstpInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index as u64);
    let n = draw(
        &mut rng,
        params.vertex_range.0 as u64,
        params.vertex_range.1 as u64,
    ) as usize;
    let mut edges: Vec<(VertexId, VertexId, Cost)> = Vec::new();
    let mut backbone = BTreeSet::new();
    for v in 1..n {
        let parent = draw(&mut rng, 0, (v - 1) as u64) as usize;
        backbone.insert((parent, v));
        edges.push((parent, v, 0));
    }
    let always = params.edge_density >= 1.0;
    let threshold = (params.edge_density * u64::MAX as f64) as u64;
    for u in 0..n {
        for v in (u + 1)..n {
            if backbone.contains(&(u, v)) {
                continue;
            }
            let coin = rng.next_u64();
            if always || coin < threshold {
                edges.push((u, v, 0));
            }
        }
    }
    for edge in edges.iter_mut() {
        edge.2 = draw(&mut rng, params.cost_range.0, params.cost_range.1);
    }
    let graph = Graph::new(n, edges).expect("generated graph is structurally valid");
    let group_count = draw(
        &mut rng,
        params.group_count_range.0 as u64,
        params.group_count_range.1 as u64,
    ) as usize;
    let mut groups = Vec::with_capacity(group_count);
    for _ in 0..group_count {
        let size = (draw(
            &mut rng,
            params.group_size_range.0 as u64,
            params.group_size_range.1 as u64,
        ) as usize)
            .min(n);
        groups.push(sample_distinct(&mut rng, n, size));
    }
    GstpInstance::new(graph, groups).expect("generated instance satisfies its invariants")
}

/// Everything observed while checking the reduction on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceRecord {
    /// Brute-force group Steiner optimum.
    pub gsmt_cost: Cost,
    /// Exact solver's optimum on the reduced instance.
    pub smt_cost: Cost,
    /// The reduction's dummy edge cost.
    pub m_value: Cost,
    pub group_count: usize,
    /// `gsmt_cost == smt_cost - m_value * group_count`, exactly.
    pub identity_holds: bool,
    /// Every dummy vertex has degree 1 in the reduced optimum.
    pub all_dummies_leaves: bool,
    /// Stripping dummies yielded a feasible tree of cost exactly
    /// `smt_cost - m_value * group_count`.
    pub extraction_feasible: bool,
    /// Heuristic cost on the reduced instance, minus the lift, minus the
    /// group optimum.
    pub heuristic_gap: Cost,
}

/// Checks the reduction on one instance. Reporting only: a non-leaf dummy
/// is recorded, not raised. Capacity and overflow errors propagate.
pub fn verify_instance(instance: &GstpInstance) -> Result<InstanceRecord> {
    if instance.group_count() < 2 {
        return Err(Error::InvalidArgument(
            "reduction checks need at least two groups".into(),
        ));
    }
    let oracle = brute_force_gsmt(instance)?;
    let reduced = transform(instance)?;
    let exact = solve_exact_stpg(reduced.stpg())?;
    let heuristic = solve_heuristic_stpg(reduced.stpg())?;

    let gsmt_cost = oracle.tree.total_cost();
    let smt_cost = exact.tree.total_cost();
    let m_value = reduced.m_value();
    let group_count = reduced.group_count();
    // representable by the transform-time M * (k + 1) check
    let lift = m_value
        .checked_mul(group_count as Cost)
        .ok_or(Error::Overflow("M * group count"))?;
    let identity_holds = gsmt_cost
        .checked_add(lift)
        .ok_or(Error::Overflow("gsmt + M * group count"))?
        == smt_cost;
    let graph = reduced.stpg().graph();
    let all_dummies_leaves = reduced
        .dummy_of_group()
        .iter()
        .all(|&d| exact.tree.degree_of(graph, d) == 1);
    let extraction_feasible = match extract(&reduced, &exact.tree) {
        Ok(tree) => {
            gstp_is_feasible(instance, &tree)?
                && smt_cost.checked_sub(lift) == Some(tree.total_cost())
        }
        Err(Error::NonLeafDummy { .. }) => false,
        Err(other) => return Err(other),
    };
    let heuristic_gap = heuristic
        .tree
        .total_cost()
        .checked_sub(lift)
        .and_then(|c| c.checked_sub(gsmt_cost))
        .ok_or(Error::Overflow("heuristic gap"))?;
    Ok(InstanceRecord {
        gsmt_cost,
        smt_cost,
        m_value,
        group_count,
        identity_holds,
        all_dummies_leaves,
        extraction_feasible,
        heuristic_gap,
    })
}

/// Per-instance records of one verification campaign plus the parameters
/// that reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    params: GenParams,
    records: Vec<InstanceRecord>,
}

impl CampaignReport {
    pub fn params(&self) -> &GenParams {
        &self.params
    }

    pub fn records(&self) -> &[InstanceRecord] {
        &self.records
    }

    pub fn identity_count(&self) -> usize {
        self.records.iter().filter(|r| r.identity_holds).count()
    }

    pub fn leaves_count(&self) -> usize {
        self.records.iter().filter(|r| r.all_dummies_leaves).count()
    }

    pub fn extraction_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.extraction_feasible)
            .count()
    }

    /// True iff every record has both the cost identity and a feasible
    /// extraction.
    pub fn all_hold(&self) -> bool {
        self.records
            .iter()
            .all(|r| r.identity_holds && r.extraction_feasible)
    }

    /// Renders the replayable text report: a header line with the
    /// parameters and seed, one line per record with the fields in
    /// declaration order (`gsmt smt m groups identity leaves extraction
    /// heuristic-gap`, booleans as 0/1), and a summary line with counts.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        writeln!(
            out,
            "campaign seed={} count={} vertices={}..{} density={} cost={}..{} groups={}..{} group-size={}..{}",
            p.seed,
            self.records.len(),
            p.vertex_range.0,
            p.vertex_range.1,
            p.edge_density,
            p.cost_range.0,
            p.cost_range.1,
            p.group_count_range.0,
            p.group_count_range.1,
            p.group_size_range.0,
            p.group_size_range.1,
        )
        .unwrap();
        for r in &self.records {
            writeln!(
                out,
                "{} {} {} {} {} {} {} {}",
                r.gsmt_cost,
                r.smt_cost,
                r.m_value,
                r.group_count,
                u8::from(r.identity_holds),
                u8::from(r.all_dummies_leaves),
                u8::from(r.extraction_feasible),
                r.heuristic_gap,
            )
            .unwrap();
        }
        writeln!(
            out,
            "summary instances={} identity={} leaves={} extraction={}",
            self.records.len(),
            self.identity_count(),
            self.leaves_count(),
            self.extraction_count(),
        )
        .unwrap();
        out
    }
}

/// Generates and checks `count` instances in index order. The first
/// capacity or overflow error aborts with the failing index.
pub fn run_campaign(params: &GenParams, count: usize) -> Result<CampaignReport> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "campaign needs at least one instance".into(),
        ));
    }
    let mut records = Vec::with_capacity(count);
    for index in 0..count {
        let instance = generate_instance(params, index);
        let record = verify_instance(&instance).map_err(|e| Error::Campaign {
            index,
            source: Box::new(e),
        })?;
        records.push(record);
    }
    Ok(CampaignReport {
        params: params.clone(),
        records,
    })
}
