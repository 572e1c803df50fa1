use std::path::PathBuf;
use std::process::ExitCode;

use ball_kmeans::InitMethod;
use ball_kmeans_cli::{cmd_report, cmd_run, Algorithm, CliError, GenerateSpec, RunConfig};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ball-kmeans", version, about = "Exact accelerated k-means benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster a dataset and write assignments, centroids and metrics
    Run(RunArgs),
    /// Summarize a metrics document produced by `run`
    Report {
        /// Path to a metrics.jsonl file
        metrics: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Input dataset, CSV or BKM1 binary (detected by magic bytes)
    #[arg(long, conflicts_with = "generate")]
    input: Option<PathBuf>,
    /// Generate a Gaussian mixture instead: n,d,k,sep
    #[arg(long)]
    generate: Option<String>,
    /// Number of clusters
    #[arg(long)]
    k: usize,
    /// Algorithm: ball, lloyd, or both (paired with an equivalence verdict)
    #[arg(long, default_value = "ball")]
    algo: String,
    /// Seeding method: random or kmeanspp
    #[arg(long, default_value = "kmeanspp")]
    init: String,
    /// RNG seed for seeding and generation
    #[arg(long)]
    seed: u64,
    /// Iteration cap
    #[arg(long, default_value_t = 300)]
    max_iter: usize,
    /// Disable stable-cluster freezing
    #[arg(long)]
    no_freeze: bool,
    /// Disable carrying centroid-distance lower bounds between iterations
    #[arg(long)]
    no_skip: bool,
    /// Worker threads (0 = one per core); outputs do not depend on this
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Directory for assignments, centroids, metrics and labels
    #[arg(long)]
    out_dir: PathBuf,
}

fn parse_init(s: &str) -> Result<InitMethod, CliError> {
    match s {
        "random" => Ok(InitMethod::RandomPoints),
        "kmeanspp" | "kmeans++" => Ok(InitMethod::KMeansPlusPlus),
        other => Err(CliError::Usage(format!(
            "unknown init method {other:?}, expected random|kmeanspp"
        ))),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let generate: Option<GenerateSpec> =
                args.generate.as_deref().map(str::parse).transpose()?;
            let config = RunConfig {
                input: args.input,
                generate,
                k: args.k,
                algorithm: args.algo.parse::<Algorithm>()?,
                init: parse_init(&args.init)?,
                seed: args.seed,
                max_iter: args.max_iter,
                freezing: !args.no_freeze,
                bound_skipping: !args.no_skip,
                workers: args.workers,
                out_dir: args.out_dir,
            };
            cmd_run(&config)
        }
        Command::Report { metrics } => {
            print!("{}", cmd_report(&metrics)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Usage(_) | CliError::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
