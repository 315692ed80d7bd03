//! Command-line front end: reduce group Steiner instances to Steiner
//! instances, solve either kind, generate random instances, and run
//! verification campaigns over the reduction.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 arithmetic or
//! capacity abort (including failed verification), 4 solver capacity.

use clap::{Parser, Subcommand, ValueEnum};
use gsteiner::solvers::{DEFAULT_TERMINAL_LIMIT, ORACLE_VERTEX_LIMIT};
use gsteiner::*;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gsteiner",
    version,
    about = "Group Steiner tree reduction toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a .gstp instance to a .stp instance with one dummy terminal
    /// per group, each dummy edge costing the sum of all original edge costs
    Transform {
        /// Input .gstp file
        #[arg(short, long)]
        input: PathBuf,
        /// Output .stp file (dummy vertices numbered after the originals)
        #[arg(short, long)]
        output: PathBuf,
        /// Sidecar map file: the M value and each group's dummy vertex
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Solve a .stp instance, or run a .gstp instance through the full
    /// reduce-solve-strip pipeline
    Solve {
        /// Input .stp or .gstp file
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Generate random instances and check on each that the group optimum
    /// equals the reduced optimum minus M times the group count
    Verify {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_nodes: usize,
        #[arg(long, default_value_t = 4)]
        max_groups: usize,
        #[arg(long, default_value_t = 3)]
        max_group_size: usize,
        #[arg(long, default_value_t = 20)]
        max_cost: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// Write the report here instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate one random .gstp instance
    Gen {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Instance index within the seed's stream
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = 10)]
        max_nodes: usize,
        #[arg(long, default_value_t = 4)]
        max_groups: usize,
        #[arg(long, default_value_t = 3)]
        max_group_size: usize,
        #[arg(long, default_value_t = 20)]
        max_cost: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// Output .gstp file
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Heuristic,
    Oracle,
}

impl Mode {
    fn kind(self) -> SolverKind {
        match self {
            Mode::Exact => SolverKind::Exact,
            Mode::Heuristic => SolverKind::Heuristic,
            Mode::Oracle => SolverKind::Oracle,
        }
    }
}

type CmdResult<T = ()> = std::result::Result<T, Failure>;

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Input and validation problems exit 2, arithmetic and capacity aborts 3.
fn input_failure(err: Error) -> Failure {
    let code = match &err {
        Error::Overflow(_)
        | Error::NonLeafDummy { .. }
        | Error::Campaign { .. }
        | Error::Capacity { .. } => 3,
        _ => 2,
    };
    fail(code, err.to_string())
}

/// Same mapping, except solver capacity exits 4 with guidance.
fn solver_failure(err: Error) -> Failure {
    if let Error::Capacity { .. } = err {
        return fail(
            4,
            format!("{err}; use --mode heuristic for larger instances"),
        );
    }
    input_failure(err)
}

fn read_input(path: &Path) -> CmdResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))
}

/// Writes via a temporary file in the target directory plus a rename, so a
/// failed run never leaves a partial output file.
fn write_atomic(path: &Path, contents: &str) -> CmdResult {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let describe =
        |e: &dyn std::fmt::Display| fail(2, format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| describe(&e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| describe(&e))?;
    tmp.persist(path).map_err(|e| describe(&e))?;
    Ok(())
}

/// Tree edges as "u v cost" with 1-based numbering, sorted by (u, v);
/// single-vertex trees print their vertex instead.
fn render_tree(graph: &Graph, tree: &SteinerTree) -> String {
    let mut out = String::new();
    if tree.vertices().len() == 1 {
        let v = *tree.vertices().iter().next().unwrap();
        out.push_str(&format!("vertex {}\n", v + 1));
    }
    let mut rows: Vec<(usize, usize, Cost)> = tree
        .edges()
        .iter()
        .map(|&id| {
            let e = graph.edge(id);
            (e.u.min(e.v) + 1, e.u.max(e.v) + 1, e.cost)
        })
        .collect();
    rows.sort_unstable();
    for (u, v, cost) in rows {
        out.push_str(&format!("{u} {v} {cost}\n"));
    }
    out.push_str(&format!("total {}\n", tree.total_cost()));
    out
}

fn cmd_transform(input: &Path, output: &Path, map: Option<&Path>) -> CmdResult {
    let text = read_input(input)?;
    let instance = parse_gstp(&text).map_err(input_failure)?;
    let reduced = transform(&instance).map_err(input_failure)?;
    write_atomic(output, &render_stpg(reduced.stpg()))?;
    if let Some(map_path) = map {
        let mut sidecar = format!("M {}\n", reduced.m_value());
        for (i, &dummy) in reduced.dummy_of_group().iter().enumerate() {
            sidecar.push_str(&format!("DUMMY {} {}\n", i + 1, dummy + 1));
        }
        write_atomic(map_path, &sidecar)?;
    }
    Ok(())
}

fn cmd_solve(input: &Path, mode: Mode) -> CmdResult {
    let text = read_input(input)?;
    match input.extension().and_then(|e| e.to_str()) {
        Some("stp") => {
            let instance = parse_stpg(&text).map_err(input_failure)?;
            let result = match mode {
                Mode::Exact => solve_exact_stpg(&instance),
                Mode::Heuristic => solve_heuristic_stpg(&instance),
                Mode::Oracle => brute_force_smt(&instance),
            }
            .map_err(solver_failure)?;
            print!("{}", render_tree(instance.graph(), &result.tree));
            Ok(())
        }
        Some("gstp") => {
            let instance = parse_gstp(&text).map_err(input_failure)?;
            let solution =
                solve_gstp_via_reduction(&instance, mode.kind()).map_err(solver_failure)?;
            print!("{}", render_tree(instance.graph(), &solution.tree));
            if let Some(trace) = &solution.reduction {
                println!(
                    "identity {} - {}*{} = {}",
                    trace.reduced_cost,
                    trace.m_value,
                    trace.group_count,
                    trace.reduced_cost - trace.m_value * trace.group_count as Cost,
                );
            }
            Ok(())
        }
        _ => Err(fail(
            2,
            format!("{}: expected a .stp or .gstp file", input.display()),
        )),
    }
}

fn build_params(
    max_nodes: usize,
    density: f64,
    max_cost: u64,
    max_groups: usize,
    max_group_size: usize,
    seed: u64,
) -> CmdResult<GenParams> {
    if max_nodes > ORACLE_VERTEX_LIMIT {
        return Err(fail(
            2,
            format!("--max-nodes {max_nodes} exceeds the oracle limit of {ORACLE_VERTEX_LIMIT}"),
        ));
    }
    if max_groups > DEFAULT_TERMINAL_LIMIT {
        return Err(fail(
            2,
            format!("--max-groups {max_groups} exceeds the exact solver limit of {DEFAULT_TERMINAL_LIMIT}"),
        ));
    }
    GenParams::new(
        (2, max_nodes),
        density,
        (1, max_cost),
        (2, max_groups),
        (1, max_group_size),
        seed,
    )
    .map_err(input_failure)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    count: usize,
    seed: u64,
    max_nodes: usize,
    max_groups: usize,
    max_group_size: usize,
    max_cost: u64,
    density: f64,
    output: Option<&Path>,
) -> CmdResult {
    let params = build_params(
        max_nodes,
        density,
        max_cost,
        max_groups,
        max_group_size,
        seed,
    )?;
    let report = run_campaign(&params, count)
        .map_err(|e| fail(3, format!("{e} (replay with --seed {seed})")))?;
    let rendered = report.render();
    match output {
        Some(path) => {
            write_atomic(path, &rendered)?;
            print!("{}", rendered.lines().last().unwrap_or_default());
            println!();
        }
        None => print!("{rendered}"),
    }
    if report.all_hold() {
        Ok(())
    } else {
        Err(fail(
            3,
            format!(
                "verification failed: identity {}/{} extraction {}/{}",
                report.identity_count(),
                count,
                report.extraction_count(),
                count
            ),
        ))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    seed: u64,
    index: usize,
    max_nodes: usize,
    max_groups: usize,
    max_group_size: usize,
    max_cost: u64,
    density: f64,
    output: &Path,
) -> CmdResult {
    let params = build_params(
        max_nodes,
        density,
        max_cost,
        max_groups,
        max_group_size,
        seed,
    )?;
    let instance = generate_instance(&params, index);
    write_atomic(output, &render_gstp(&instance))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Transform { input, output, map } => cmd_transform(&input, &output, map.as_deref()),
        Command::Solve { input, mode } => cmd_solve(&input, mode),
        Command::Verify {
            count,
            seed,
            max_nodes,
            max_groups,
            max_group_size,
            max_cost,
            density,
            output,
        } => cmd_verify(
            count,
            seed,
            max_nodes,
            max_groups,
            max_group_size,
            max_cost,
            density,
            output.as_deref(),
        ),
        Command::Gen {
            seed,
            index,
            max_nodes,
            max_groups,
            max_group_size,
            max_cost,
            density,
            output,
        } => cmd_gen(
            seed,
            index,
            max_nodes,
            max_groups,
            max_group_size,
            max_cost,
            density,
            &output,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
