//! `arrange`: characteristic polynomials, coking and king eliminations, and
//! freeness of digraph arrangements from the command line.

mod commands;
mod input;
mod report;
mod verify;

use anyhow::{bail, Result};
use arrangement_core::oracle::OracleLimits;
use clap::{Parser, Subcommand};
use commands::{ChiMethod, FreeMethod, Op, Step};
use input::InputArgs;
use report::{error_record, exit_code_for, InputEcho, RunReport};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use verify::{Suite, SuiteArgs};

#[derive(Parser, Debug)]
#[command(name = "arrange", version, about = "Hyperplane arrangements of vertex-weighted digraphs")]
struct Cli {
    /// Print a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the oracle's random evaluation points.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for the counting and classification kernels.
    #[arg(long, global = true, env = "ARRANGE_THREADS")]
    threads: Option<usize>,
    /// Largest arrangement the oracle will attempt.
    #[arg(long, global = true)]
    oracle_max_hyperplanes: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial of A(G, ψ) or of a named arrangement.
    Chi {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: ChiMethod,
    },
    /// Coking or king elimination, one step or a chain file.
    Transform {
        #[command(flatten)]
        input: InputArgs,
        #[arg(value_enum, required_unless_present = "chain")]
        op: Option<Op>,
        #[arg(required_unless_present = "chain")]
        vertex: Option<usize>,
        /// Apply inside this vertex set (`1,2,3`) or `active`; defaults to all vertices.
        #[arg(long)]
        within: Option<String>,
        /// JSON array of steps `{"op": "ceo", "vertex": 4, "within": [1, 2, 3, 4]}`.
        #[arg(long, conflicts_with_all = ["op", "vertex", "within"])]
        chain: Option<PathBuf>,
        /// Report the weight condition and compare χ before and after.
        #[arg(long)]
        check: bool,
    },
    /// Freeness of the cone.
    Free {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "pipeline")]
        method: FreeMethod,
    },
    /// Supersolvability of the cone, with an M-chain when one exists.
    Supersolvable {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a reproduction suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        /// Largest multiplicity for the wakamiko suite.
        #[arg(long)]
        max: Option<usize>,
        /// Number of primes per ℓ for the bijection suite.
        #[arg(long, default_value_t = 3)]
        primes: usize,
    },
    /// Saito-criterion freeness oracle on the cone.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Use a central input as it is instead of coning it.
        #[arg(long)]
        no_cone: bool,
        /// Also list minimal generator degrees up to this degree.
        #[arg(long)]
        degrees: Option<usize>,
    },
}

pub struct Settings {
    pub limits: OracleLimits,
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli, report: &mut RunReport) -> Result<()> {
    let mut limits = OracleLimits::default();
    if let Some(s) = cli.seed {
        limits.seed = s;
    }
    if let Some(m) = cli.oracle_max_hyperplanes {
        limits.max_hyperplanes = m;
    }
    let settings = Settings { limits };
    let mut resolve = |args: &InputArgs| -> Result<input::Input> {
        let i = input::resolve(args)?;
        report.input = Some(InputEcho { label: i.label.clone(), digest: i.digest.clone() });
        Ok(i)
    };
    match &cli.command {
        Command::Chi { input, method } => {
            let i = resolve(input)?;
            commands::chi(&i, *method, report)
        }
        Command::Transform { input, op, vertex, within, chain, check } => {
            let i = resolve(input)?;
            let steps = match chain {
                Some(path) => commands::read_chain(path)?,
                None => {
                    let (Some(op), Some(vertex)) = (op, vertex) else { bail!("give an operation and a vertex, or --chain") };
                    let within = within.as_deref().map(commands::parse_within).transpose()?;
                    vec![Step { op: *op, vertex: *vertex, within }]
                }
            };
            commands::transform(&i, &steps, *check, report)
        }
        Command::Free { input, method } => {
            let i = resolve(input)?;
            commands::free(&i, *method, &settings, report)
        }
        Command::Supersolvable { input } => {
            let i = resolve(input)?;
            commands::supersolvable_cmd(&i, report)
        }
        Command::Oracle { input, no_cone, degrees } => {
            let i = resolve(input)?;
            commands::oracle_cmd(&i, *no_cone, *degrees, &settings, report)
        }
        Command::Verify { suite, ell, max_k, max, primes } => {
            if *ell == Some(0) {
                bail!("--ell must be positive");
            }
            let args = SuiteArgs { ell: *ell, max_k: *max_k, max: *max, primes: *primes };
            verify::run(*suite, &args, &settings, report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not configure {n} threads: {e}");
        }
    }
    let start = Instant::now();
    let command = command_echo();
    let mut report = RunReport::new(command.clone());
    match run(&cli, &mut report) {
        Ok(()) => report.emit(cli.json, start.elapsed()),
        Err(e) => {
            let code = exit_code_for(&e);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&error_record(&command, &e, code)).expect("serializes"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(code)
        }
    }
}
