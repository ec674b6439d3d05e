use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use evolab::harness::{
    emit_plot_data, group_by_cell, load_results, run_experiment, summarize, summarize_dir,
    write_summary, ExperimentConfig, Layout, PlotSelection,
};
use evolab::{
    run_trial, DistributionSpec, FunctionClass, InitMode, Regime, SupportSampling, TrialConfig,
};

const NAMES: &str = "\
Class names:
  general_conjunction (genconj)   general_disjunction (gendisj)
  monotone_conjunction (monconj)  monotone_disjunction (mondisj)
  majority                        parity

Distributions:
  uniform  binomial:p=0.25  beta:a=2,b=5,t=0.5  bernoulli:p=0.75

Regimes:
  standard  smart_init  no_neutral

Exit status: 0 success, 1 usage or configuration error,
2 the run finished without meeting its success condition.";

#[derive(Parser)]
#[command(name = "evolab", version, about = "Evolvability simulator for Boolean function classes", after_help = NAMES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one trial and print its result as JSON.
    Run(RunArgs),
    /// Run a grid of cells and write trajectories, results and summary.csv.
    Sweep(SweepArgs),
    /// Rebuild summary.csv from the trial files under a directory.
    Summarize(SummarizeArgs),
    /// Write plot-ready CSV for one figure layout.
    PlotData(PlotArgs),
}

#[derive(Args)]
struct EngineArgs {
    /// Samples per generation [default: 1000]
    #[arg(long)]
    samples: Option<usize>,
    /// Tolerance t for beneficial/neutral classification [default: 0.01]
    #[arg(long)]
    tolerance: Option<f64>,
    /// Success threshold: validation perf must exceed 1 - epsilon [default: 0.05]
    #[arg(long)]
    epsilon: Option<f64>,
    /// Size of the held-out validation set [default: 5000]
    #[arg(long)]
    validation_size: Option<usize>,
    /// Generation cap [default: 500]
    #[arg(long = "max-gens")]
    max_gens: Option<usize>,
    /// Target support rule: uniform_subset or uniform_size [default: uniform_subset]
    #[arg(long)]
    support: Option<SupportSampling>,
    /// Draw a fresh validation set every generation
    #[arg(long)]
    redraw_validation: bool,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    class: FunctionClass,
    #[arg(long)]
    n: usize,
    /// Input distribution
    #[arg(long, default_value = "uniform")]
    dist: DistributionSpec,
    #[arg(long, default_value = "standard")]
    regime: Regime,
    /// Initial hypothesis: random, empty, subset:k or near:k [default: per regime]
    #[arg(long)]
    init: Option<InitMode>,
    #[arg(long, env = "EVOLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON experiment config; flags below override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Classes, comma separated [default: all six]
    #[arg(long, value_delimiter = ',')]
    class: Vec<FunctionClass>,
    /// Dimensions, comma separated [default: 5,10,20,30,50]
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    /// Distribution; repeat for several [default: uniform]
    #[arg(long)]
    dist: Vec<DistributionSpec>,
    /// Regimes, comma separated [default: standard]
    #[arg(long, value_delimiter = ',')]
    regime: Vec<Regime>,
    /// Trials per cell [default: 30 for standard/uniform cells, 5 otherwise]
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed [default: 0]
    #[arg(long, env = "EVOLAB_SEED")]
    seed: Option<u64>,
    /// Output directory [default: results]
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads [default: available parallelism]
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Args)]
struct SummarizeArgs {
    /// Directory holding a finished sweep
    #[arg(long = "in")]
    input: PathBuf,
    /// Where to write summary.csv [default: the input directory]
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// summary_grid, fitness_grid or per_class_dist_grid
    #[arg(long)]
    layout: Layout,
    /// Regime to plot
    #[arg(long, default_value = "standard")]
    regime: Regime,
    /// Distribution to plot (ignored by per_class_dist_grid)
    #[arg(long, default_value = "uniform")]
    dist: DistributionSpec,
    /// Directory that receives plots/<Layout>.csv [default: the input directory]
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Unmet,
}

impl From<evolab::Error> for Failure {
    fn from(e: evolab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Summarize(args) => cmd_summarize(args),
        Command::PlotData(args) => cmd_plot_data(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unmet) => ExitCode::from(2),
    }
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let mut cfg = TrialConfig::new(args.class, args.n)
        .with_seed(args.seed)
        .with_dist(args.dist)
        .with_regime(args.regime);
    cfg.init = args.init;
    let e = args.engine;
    cfg.samples = e.samples.unwrap_or(cfg.samples);
    cfg.tolerance = e.tolerance.unwrap_or(cfg.tolerance);
    cfg.epsilon = e.epsilon.unwrap_or(cfg.epsilon);
    cfg.validation_size = e.validation_size.unwrap_or(cfg.validation_size);
    cfg.max_generations = e.max_gens.unwrap_or(cfg.max_generations);
    cfg.support = e.support.unwrap_or(cfg.support);
    cfg.validation_redraw |= e.redraw_validation;

    let result = run_trial(&cfg)?;
    let json = serde_json::to_string_pretty(&result).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{json}");
    if result.is_success() {
        Ok(())
    } else {
        Err(Failure::Unmet)
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Failure> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::default(),
    };
    if !args.class.is_empty() {
        cfg.classes = args.class;
    }
    if !args.dims.is_empty() {
        cfg.dims = args.dims;
    }
    if !args.dist.is_empty() {
        cfg.dists = args.dist;
    }
    if !args.regime.is_empty() {
        cfg.regimes = args.regime;
    }
    if args.trials.is_some() {
        cfg.trials = args.trials;
    }
    cfg.master_seed = args.seed.unwrap_or(cfg.master_seed);
    cfg.out = args.out.unwrap_or(cfg.out);
    let e = args.engine;
    cfg.samples = e.samples.unwrap_or(cfg.samples);
    cfg.tolerance = e.tolerance.unwrap_or(cfg.tolerance);
    cfg.epsilon = e.epsilon.unwrap_or(cfg.epsilon);
    cfg.validation_size = e.validation_size.unwrap_or(cfg.validation_size);
    cfg.max_generations = e.max_gens.unwrap_or(cfg.max_generations);
    cfg.support = e.support.unwrap_or(cfg.support);
    cfg.validation_redraw |= e.redraw_validation;

    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let report = run_experiment(&cfg, workers)?;

    for cell in &report.cells {
        let done = cell.results.len();
        let wins = cell.results.iter().filter(|r| r.is_success()).count();
        let verdict =
            report
                .rows
                .iter()
                .find(|r| r.cell() == cell.cell)
                .map_or("no completed trials", |r| {
                    if r.evolvable {
                        "evolvable"
                    } else {
                        "not evolvable"
                    }
                });
        let mut line = format!("{}: {wins}/{done} succeeded, {verdict}", cell.cell.key());
        if !cell.errors.is_empty() {
            line.push_str(&format!(", {} errored", cell.errors.len()));
        }
        eprintln!("{line}");
    }
    for err in report.errors() {
        eprintln!(
            "error in {} trial {}: {}",
            evolab::harness::Cell::of(&err.config).key(),
            err.trial,
            err.message
        );
    }
    if report.errors().next().is_some() {
        Err(Failure::Unmet)
    } else {
        Ok(())
    }
}

fn cmd_summarize(args: SummarizeArgs) -> Result<(), Failure> {
    let rows = summarize_dir(&args.input)?;
    let out = args.out.unwrap_or(args.input);
    std::fs::create_dir_all(&out).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
    let path = write_summary(&out, &rows)?;
    eprintln!("wrote {} ({} cells)", path.display(), rows.len());
    Ok(())
}

fn cmd_plot_data(args: PlotArgs) -> Result<(), Failure> {
    let results = load_results(&args.input)?;
    let rows = group_by_cell(&results)
        .values()
        .map(|group| summarize(group))
        .collect::<evolab::Result<Vec<_>>>()?;
    let sel = PlotSelection {
        regime: args.regime,
        dist: args.dist,
    };
    let out = args.out.unwrap_or(args.input);
    let path = emit_plot_data(&rows, &results, args.layout, sel, &out)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}
