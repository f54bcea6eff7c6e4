mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use report::{render, usage, Failure, Report, Style};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bluered_core::reduction::DEFAULT_T;
use bluered_core::solver::DEFAULT_STATE_BUDGET;
use bluered_core::structure::DEFAULT_MAX_CYCLE_LEN;

#[derive(Parser, Debug)]
#[command(
    name = "bluered",
    version,
    about = "Split graphs into a P3-free blue part and a triangle-free red part"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Print one JSON object per job.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in the output.
    #[arg(long, global = true)]
    timings: bool,
    /// Seed for randomized generators.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Search-state budget for enumerations and backtracking.
    #[arg(long, global = true, default_value_t = DEFAULT_STATE_BUDGET)]
    max_states: u64,
    /// Longest induced cycle searched by class checks and parity scans.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CYCLE_LEN)]
    max_cycle_len: usize,
    /// Worker threads when --graph names a directory.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is partitionable and print a certified partition.
    Solve(GraphArg),
    /// Decide edge-partitionability of a triangle-free graph.
    EdgeSolve(GraphArg),
    /// Print the DIMACS encoding of the partition problem.
    EncodeCnf {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check membership in a named graph class.
    Classify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "class")]
        class: String,
        /// Cycle window bound; defaults to the smallest value the class accepts.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Run a constructive partition method.
    Partition {
        #[command(flatten)]
        graph: GraphArg,
        /// auto, p1, p2, p3, p42, p5, p6, pawfree, kkbar or exact.
        #[arg(long, default_value = "auto")]
        method: String,
        /// Independence bound for kkbar.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Compile a (3,<=4) CNF formula into a graph.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        /// Gadget set file; the built-in set when omitted.
        #[arg(long)]
        gadgets: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_T)]
        t: usize,
        /// Write the graph here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the provenance JSON here.
        #[arg(long)]
        provenance: Option<PathBuf>,
        /// Also check satisfiability against partitionability.
        #[arg(long)]
        verify: bool,
    },
    /// Check a gadget against its contract.
    VerifyGadget {
        #[arg(long, value_enum)]
        role: Option<Role>,
        /// Annotated gadget graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Gadget set file, verified ring by ring.
        #[arg(long)]
        gadgets: Option<PathBuf>,
        /// Slot spacing used to size rings when verifying a gadget set.
        #[arg(long, default_value_t = DEFAULT_T)]
        t: usize,
        /// Largest number of occurrences per variable when verifying a set.
        #[arg(long, default_value_t = 4)]
        max_occurrences: usize,
    },
    /// Generate a graph or a built-in gadget.
    Gen {
        /// Generator name, e.g. cycle, random, petersen, red-forcer.
        name: String,
        params: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
    },
    /// Print basic invariants of a graph.
    Stats {
        #[command(flatten)]
        graph: GraphArg,
        /// Also count valid partitions by enumeration.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct GraphArg {
    /// Edge-list file, or a directory of .el files.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    RedForcer,
    BlueForcer,
    Variable,
    ClauseEdge,
    EdgeForcer,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    El,
    Dot,
}

type Job = Box<dyn Fn(&Path) -> Result<Report, Failure> + Sync>;

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seed: Option<u64>,
    pub max_states: u64,
    pub max_cycle_len: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let g = &cli.global;
    let style = Style {
        json: g.json,
        timings: g.timings,
        seed: g.seed,
    };
    let settings = Settings {
        seed: g.seed,
        max_states: g.max_states,
        max_cycle_len: g.max_cycle_len,
    };
    if g.jobs == 0 {
        return finish(style, &Err(usage("--jobs must be at least 1")), 0.0);
    }

    // commands that read one graph can also sweep a directory
    let per_graph: Option<(&Path, Job)> = match &cli.command {
        Command::Solve(a) => Some((&a.graph, Box::new(commands::solve))),
        Command::EdgeSolve(a) => Some((&a.graph, Box::new(commands::edge_solve))),
        Command::Classify { graph, class, t } => {
            let (class, t) = (class.clone(), *t);
            Some((
                &graph.graph,
                Box::new(move |p| commands::classify(p, &class, t, settings)),
            ))
        }
        Command::Partition { graph, method, k } => {
            let (method, k) = (method.clone(), *k);
            Some((
                &graph.graph,
                Box::new(move |p| commands::partition(p, &method, k, settings)),
            ))
        }
        Command::Stats { graph, count } => {
            let count = *count;
            Some((&graph.graph, Box::new(move |p| commands::stats(p, count, settings))))
        }
        _ => None,
    };
    if let Some((path, job)) = per_graph {
        if path.is_dir() {
            return sweep(style, path, g.jobs, &*job);
        }
        return timed(style, || job(path));
    }

    timed(style, || match &cli.command {
        Command::EncodeCnf { graph, out } => commands::encode(&graph.graph, out.as_deref()),
        Command::Reduce {
            cnf,
            gadgets,
            t,
            out,
            provenance,
            verify,
        } => commands::reduce(
            cnf,
            gadgets.as_deref(),
            *t,
            out.as_deref(),
            provenance.as_deref(),
            *verify,
            settings,
        ),
        Command::VerifyGadget {
            role,
            graph,
            gadgets,
            t,
            max_occurrences,
        } => commands::verify_gadget(
            *role,
            graph.as_deref(),
            gadgets.as_deref(),
            *t,
            *max_occurrences,
            settings,
        ),
        Command::Gen {
            name,
            params,
            out,
            format,
        } => commands::gen(name, params, out.as_deref(), *format, settings),
        _ => unreachable!("graph commands handled above"),
    })
}

fn timed(style: Style, job: impl FnOnce() -> Result<Report, Failure>) -> ExitCode {
    let start = Instant::now();
    let result = job();
    finish(style, &result, start.elapsed().as_secs_f64() * 1e3)
}

fn finish(style: Style, result: &Result<Report, Failure>, ms: f64) -> ExitCode {
    let text = render(style, None, result, ms);
    if result.is_err() && !style.json {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(result.as_ref().err().map_or(0, Failure::exit_code))
}

/// Runs `job` on every `.el` file of `dir` in name order. Each file runs in
/// isolation: an error or a panic only affects that file's result. The exit
/// code is the largest per-file code.
fn sweep(style: Style, dir: &Path, jobs: usize, job: &(dyn Fn(&Path) -> Result<Report, Failure> + Sync)) -> ExitCode {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "el"))
            .collect(),
        Err(e) => return finish(style, &Err(usage(format!("cannot read {}: {e}", dir.display()))), 0.0),
    };
    files.sort();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return finish(style, &Err(usage(format!("cannot start workers: {e}"))), 0.0),
    };
    let results: Vec<(String, Result<Report, Failure>, f64)> = pool.install(|| {
        use rayon::prelude::*;
        files
            .par_iter()
            .map(|p| {
                let start = Instant::now();
                let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| job(p)))
                    .unwrap_or_else(|_| Err(Failure::Internal("job panicked".into())));
                let name = p
                    .file_name()
                    .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
                (name, r, start.elapsed().as_secs_f64() * 1e3)
            })
            .collect()
    });
    let mut out = std::io::stdout().lock();
    let mut code = 0;
    for (name, r, ms) in &results {
        let _ = out.write_all(render(style, Some(name), r, *ms).as_bytes());
        code = code.max(r.as_ref().err().map_or(0, Failure::exit_code));
    }
    ExitCode::from(code)
}
