//! The `locol` command-line front end.
//!
//! Output is line-oriented plain text. Exit status: [`EXIT_OK`] on success or
//! a valid verdict, [`EXIT_INVALID`] for an invalid or non-re-checking
//! certificate or a failed sweep row, [`EXIT_USAGE`] for malformed arguments
//! or input, [`EXIT_INCONCLUSIVE`] when the solver hit its node limit.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::Certificate;
use crate::coloring::{is_locating, is_neighbor_locating, Coloring, Mode};
use crate::construct::{clique_family_coloring, cycle_coloring, optimal_coloring, path_coloring};
use crate::error::{Error, Result};
use crate::family::{build_graph, GraphSpec};
use crate::formulas::{chi_l2_cycle, chi_l2_path, chi_l_join, clique_family_colors, formula};
use crate::sample::{random_connected_graph, random_proper_coloring, random_proper_sequence};
use crate::segment::{all_segments_unique, Topology};
use crate::solver::{min_colors_exact, SearchConfig, SolveValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "locol",
    version,
    about = "Locating and neighbor-locating graph colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a certificate for the optimal construction of SPEC.
    Gen {
        spec: GraphSpec,
        /// Defaults to `locating` for joins and friendship graphs, `nl` otherwise.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Check a coloring, inline or from a file of certificate records.
    Verify {
        #[arg(long, requires = "colors", required_unless_present = "file")]
        graph: Option<GraphSpec>,
        #[arg(long, requires = "graph")]
        colors: Option<Coloring>,
        #[arg(long, default_value = "nl")]
        mode: Mode,
        /// One certificate per line; `-` reads standard input.
        #[arg(long, conflicts_with_all = ["graph", "colors"])]
        file: Option<PathBuf>,
    },
    /// Exact minimum number of colors by backtracking search.
    Solve {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Disable segment pruning on paths and cycles.
        #[arg(long)]
        no_prune: bool,
        /// Disable first-occurrence symmetry breaking.
        #[arg(long)]
        no_symmetry: bool,
        /// Search disjoint subtrees concurrently.
        #[arg(long)]
        parallel: bool,
    },
    /// Closed-form chromatic number with the branch that produced it.
    Formula {
        #[arg(long, required_unless_present = "join", conflicts_with = "join")]
        graph: Option<GraphSpec>,
        #[arg(long, num_args = 2, value_names = ["SPEC1", "SPEC2"])]
        join: Option<Vec<GraphSpec>>,
        /// Defaults to `locating` for joins and friendship graphs, `nl` otherwise.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Range checks of constructions, formulas and the solver.
    Sweep {
        /// Largest path/cycle length checked against the constructions.
        #[arg(long, default_value_t = 300)]
        max_n: usize,
        /// Seed for the randomized equivalence checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs and random sequences per equivalence check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn default_mode(spec: &GraphSpec) -> Mode {
    match spec {
        GraphSpec::Join(..) | GraphSpec::Friendship(_) => Mode::Locating,
        _ => Mode::NeighborLocating,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { spec, mode } => {
            let mode = mode.unwrap_or_else(|| default_mode(&spec));
            let coloring = optimal_coloring(&spec)?;
            let cert = Certificate::issue(spec, coloring, mode)?;
            emit(out, &cert);
            Ok(verdict_code(&cert))
        }
        Command::Verify {
            graph: Some(spec),
            colors: Some(coloring),
            mode,
            ..
        } => {
            let cert = Certificate::issue(spec, coloring, mode)?;
            emit(out, &cert);
            Ok(verdict_code(&cert))
        }
        Command::Verify {
            file: Some(path), ..
        } => verify_file(&path, out, err),
        Command::Verify { .. } => unreachable!("clap enforces --graph/--colors or --file"),
        Command::Solve {
            graph,
            mode,
            max_k,
            node_limit,
            no_prune,
            no_symmetry,
            parallel,
        } => {
            let g = build_graph(&graph)?;
            let cfg = SearchConfig {
                max_k,
                node_limit,
                symmetry_breaking: !no_symmetry,
                segment_pruning: !no_prune,
                parallel,
            };
            let res = min_colors_exact(&g, mode, &cfg)?;
            let _ = writeln!(out, "spec={graph} mode={mode} {res}");
            Ok(match res.value {
                SolveValue::Inconclusive { .. } => EXIT_INCONCLUSIVE,
                _ => EXIT_OK,
            })
        }
        Command::Formula { graph, join, mode } => {
            let res = match (graph, join) {
                (Some(spec), None) => formula(&spec, mode.unwrap_or_else(|| default_mode(&spec)))?,
                (None, Some(pair)) => {
                    let spec = GraphSpec::join(pair[0].clone(), pair[1].clone());
                    match mode.unwrap_or(Mode::Locating) {
                        Mode::Locating => chi_l_join(&pair[0], &pair[1])?,
                        Mode::NeighborLocating => formula(&spec, Mode::NeighborLocating)?,
                    }
                }
                _ => unreachable!("clap enforces exactly one of --graph and --join"),
            };
            let _ = writeln!(out, "{res}");
            Ok(EXIT_OK)
        }
        Command::Sweep {
            max_n,
            seed,
            samples,
        } => {
            let rows = sweep(max_n, seed, samples);
            let _ = writeln!(out, "seed={seed} max_n={max_n} samples={samples}");
            for row in &rows {
                let _ = writeln!(out, "{row}");
            }
            Ok(if rows.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
    }
}

fn emit(out: &mut dyn Write, cert: &Certificate) {
    let _ = writeln!(out, "{cert}");
}

fn verdict_code(cert: &Certificate) -> i32 {
    if cert.verdict.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn verify_file(path: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let read_err = |e: io::Error| Error::CertificateSyntax(format!("{}: {e}", path.display()));
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(io::BufReader::new(
            std::fs::File::open(path).map_err(read_err)?,
        ))
    };
    let mut code = EXIT_OK;
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(read_err)?;
        if line.is_empty() {
            continue;
        }
        let recorded: Certificate = line
            .parse()
            .map_err(|e| Error::CertificateSyntax(format!("line {}: {e}", i + 1)))?;
        let fresh = Certificate::issue(
            recorded.spec.clone(),
            recorded.coloring.clone(),
            recorded.mode,
        )?;
        emit(out, &fresh);
        if fresh != recorded {
            let _ = writeln!(err, "line {}: recorded verdict does not re-check", i + 1);
            code = EXIT_INVALID;
        } else if !fresh.verdict.is_valid() {
            code = EXIT_INVALID;
        }
    }
    Ok(code)
}

/// One row of the `sweep` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for SweepRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<24} {}", self.name, self.detail)
    }
}

fn row(name: &'static str, failures: Vec<String>, checked: usize) -> SweepRow {
    SweepRow {
        name,
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{checked} checked"),
            Some(first) => format!("{} of {checked} failed, first: {first}", failures.len()),
        },
    }
}

/// Runs the range checks behind `locol sweep`.
pub fn sweep(max_n: usize, seed: u64, samples: usize) -> Vec<SweepRow> {
    let mut rows = Vec::new();

    let mut fails = Vec::new();
    for n in 2..=max_n {
        let ok = path_coloring(n).is_ok_and(|s| {
            s.palette_size() == chi_l2_path(n)
                && all_segments_unique(s.entries(), Topology::Path).unwrap_or(false)
        });
        if !ok {
            fails.push(format!("path:{n}"));
        }
    }
    rows.push(row("path-construction", fails, max_n.saturating_sub(1)));

    let mut fails = Vec::new();
    for n in 3..=max_n {
        let ok = cycle_coloring(n).is_ok_and(|s| {
            let g = build_graph(&GraphSpec::Cycle(n)).expect("cycle");
            Ok(s.palette_size()) == chi_l2_cycle(n)
                && is_neighbor_locating(&g, &s.to_coloring()).is_ok_and(|v| v.is_valid())
        });
        if !ok {
            fails.push(format!("cycle:{n}"));
        }
    }
    rows.push(row("cycle-construction", fails, max_n.saturating_sub(2)));

    let mut fails = Vec::new();
    let mut checked = 0;
    for t in 1..=20 {
        for m in 1..=5 {
            checked += 1;
            if clique_family_coloring(t, m).map(|f| f.k()) != Ok(clique_family_colors(t, m)) {
                fails.push(format!("cliques:{t}x{m}"));
            }
        }
    }
    rows.push(row("clique-construction", fails, checked));

    let cfg = SearchConfig::default();
    let mut fails = Vec::new();
    let small: Vec<GraphSpec> = (2..=12)
        .map(GraphSpec::Path)
        .chain((3..=12).map(GraphSpec::Cycle))
        .collect();
    for spec in &small {
        let g = build_graph(spec).expect("small family");
        let want = formula(spec, Mode::NeighborLocating).map(|r| r.value);
        let got = min_colors_exact(&g, Mode::NeighborLocating, &cfg).map(|r| r.value);
        if !matches!((got, want), (Ok(SolveValue::Exact(a)), Ok(b)) if a == b) {
            fails.push(spec.to_string());
        }
    }
    rows.push(row("oracle-small-families", fails, small.len()));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = Vec::new();
    let mut checked = 0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=8);
        let g = random_connected_graph(&mut rng, n, 2);
        for _ in 0..20 {
            let k = rng.gen_range(1..=n);
            let f = random_proper_coloring(&mut rng, &g, k);
            checked += 1;
            let a = is_locating(&g, &f).map(|v| v.is_valid());
            let b = is_neighbor_locating(&g, &f).map(|v| v.is_valid());
            if a != b {
                fails.push(format!(
                    "n={n} edges={:?} colors={f}",
                    g.edges().collect::<Vec<_>>()
                ));
            }
        }
    }
    rows.push(row("diameter-two-equivalence", fails, checked));

    let mut fails = Vec::new();
    for _ in 0..samples {
        let topology = if rng.gen_bool(0.5) {
            Topology::Path
        } else {
            Topology::Cycle
        };
        let (n, spec_of): (usize, fn(usize) -> GraphSpec) = match topology {
            Topology::Path => (rng.gen_range(2..=15), GraphSpec::Path),
            Topology::Cycle => (rng.gen_range(3..=15), GraphSpec::Cycle),
        };
        let k = rng.gen_range(3..=5);
        let seq = random_proper_sequence(&mut rng, n, k, topology);
        let g = build_graph(&spec_of(n)).expect("path or cycle");
        let f = Coloring::new(seq.clone()).expect("compacted palette");
        let a = is_neighbor_locating(&g, &f).map(|v| v.is_valid());
        let b = all_segments_unique(&seq, topology);
        if a != b {
            fails.push(format!("{} colors={f}", spec_of(n)));
        }
    }
    rows.push(row("segment-equivalence", fails, samples));

    rows
}
