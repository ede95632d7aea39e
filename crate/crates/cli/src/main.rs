//! `bench`: run seeded experiment batches and print the built-in catalogs.
//!
//! Exit codes: 0 on success, 2 on configuration errors, 3 on i/o errors.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use whale_swarm::harness::{
    algo_defaults, preset_for, run_experiment, ConfigOverlay, HarnessError, WsaOverlay,
    DEFAULT_RUNS,
};
use whale_swarm::objective::{FunctionId, Objective};
use whale_swarm::wsa::DEFAULT_RHO0;

#[derive(Parser)]
#[command(name = "bench", version, about = "Benchmark harness for the whale swarm optimizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch of seeded optimizer runs and write the report files
    Run(Box<RunArgs>),
    /// Print every built-in (function, algorithm) parameter preset
    Presets,
    /// Print the benchmark function catalog
    Functions,
}

#[derive(Args)]
struct RunArgs {
    /// TOML config file; command-line flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Function id, F1..F12
    #[arg(long)]
    function: Option<String>,
    /// Algorithm: wsa, ga, de, or pso
    #[arg(long)]
    algo: Option<String>,
    /// Population size
    #[arg(long)]
    pop: Option<usize>,
    /// Evaluation budget per run
    #[arg(long)]
    evals: Option<u64>,
    /// Accuracy level for counting optima
    #[arg(long)]
    eps: Option<f64>,
    /// Attenuation coefficient for the whale swarm optimizer
    #[arg(long)]
    eta: Option<f64>,
    /// Number of independent runs
    #[arg(long)]
    runs: Option<usize>,
    /// Base seed; run k uses seed + k
    #[arg(long)]
    seed: Option<u64>,
    /// Seed of the landscape shift for F7-F12
    #[arg(long = "shift-seed")]
    shift_seed: Option<u64>,
    /// Worker threads for the batch (0 = one per core)
    #[arg(long)]
    jobs: Option<usize>,
    /// Output directory for the report files
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn overlay(&self) -> ConfigOverlay {
        ConfigOverlay {
            function: self.function.clone(),
            algorithm: self.algo.clone(),
            pop: self.pop,
            evals: self.evals,
            eps: self.eps,
            runs: self.runs,
            seed: self.seed,
            shift_seed: self.shift_seed,
            jobs: self.jobs,
            out: self.out.clone(),
            wsa: self.eta.map(|eta| WsaOverlay {
                eta: Some(eta),
                rho0: None,
            }),
            ga: None,
            de: None,
            pso: None,
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                HarnessError::Config(_) => ExitCode::from(2),
                HarnessError::Io { .. } => ExitCode::from(3),
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), HarnessError> {
    match cli.command {
        Command::Run(args) => run(*args),
        Command::Presets => {
            print!("{}", render_presets());
            Ok(())
        }
        Command::Functions => {
            print!("{}", render_functions());
            Ok(())
        }
    }
}

fn run(args: RunArgs) -> Result<(), HarnessError> {
    let mut overlay = ConfigOverlay::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        })?;
        let from_file: ConfigOverlay = toml::from_str(&text)
            .map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        overlay = overlay.merged_with(from_file);
    }
    overlay = overlay.merged_with(args.overlay());
    let config = overlay.resolve()?;

    let files = run_experiment(&config)?;
    let report = &files.report;
    println!(
        "{} {}: {} runs, {} evals each",
        config.function, config.algorithm, config.runs, config.max_evals
    );
    println!("  SR            {:.4}", report.sr);
    println!("  ANOF          {:.4}", report.anof);
    match (report.mpr_mean, report.mpr_std) {
        (Some(mean), Some(std)) => println!(
            "  MPR           {mean:.6} +- {std:.2e} over {} qualified runs",
            report.mpr_qualified_runs
        ),
        _ => println!("  MPR           no qualified runs"),
    }
    println!(
        "  best fitness  mean {:.6e}, std {:.2e}, min {:.6e}",
        report.best_mean, report.best_std, report.best_min
    );
    println!("  wall time     {:.2}s", files.wall_time_s);
    println!("  reports in    {}", config.out_dir.display());
    Ok(())
}

fn render_presets() -> String {
    let mut out = String::new();
    out.push_str("function  eps      pop  evals    wsa_eta\n");
    for id in FunctionId::ALL {
        let p = preset_for(id);
        let eps = format!("{:e}", p.eps);
        let eta = format!("{:e}", p.wsa_eta);
        out.push_str(&format!(
            "{:<9} {:<8} {:<4} {:<8} {}\n",
            id.name(),
            eps,
            p.pop_size,
            p.max_evals,
            eta,
        ));
    }
    out.push_str(&format!(
        "\nwsa: rho0 = {DEFAULT_RHO0}; eta as tabled above\n\
         ga:  pc = {}, pm = {}\n\
         de:  pc = {}, f = {}\n\
         pso: omega = {}, c1 = {}, c2 = {}\n\
         runs default {DEFAULT_RUNS}; run k is seeded with seed + k\n",
        algo_defaults::GA_CROSSOVER_PROB,
        algo_defaults::GA_MUTATION_PROB,
        algo_defaults::DE_CROSSOVER_PROB,
        algo_defaults::DE_SCALE_FACTOR,
        algo_defaults::PSO_INERTIA,
        algo_defaults::PSO_COGNITIVE,
        algo_defaults::PSO_SOCIAL,
    ));
    out
}

fn render_functions() -> String {
    let mut out = String::new();
    out.push_str("id   name                      dim  range                optima  minimum\n");
    for id in FunctionId::ALL {
        let obj = Objective::standard(id);
        let bounds = obj.bounds();
        let range = if (1..bounds.dimension()).all(|d| {
            bounds.lower()[d] == bounds.lower()[0] && bounds.upper()[d] == bounds.upper()[0]
        }) {
            format!("[{}, {}]^{}", bounds.lower()[0], bounds.upper()[0], bounds.dimension())
        } else {
            let per: Vec<String> = bounds
                .lower()
                .iter()
                .zip(bounds.upper())
                .map(|(lo, hi)| format!("[{lo}, {hi}]"))
                .collect();
            per.join(" x ")
        };
        out.push_str(&format!(
            "{:<4} {:<25} {:<4} {:<20} {:<7} {}\n",
            id.name(),
            id.description(),
            obj.dimension(),
            range,
            obj.num_global_optima(),
            obj.target_value(),
        ));
    }
    out.push_str("\nF7-F12 are run with a seeded random shift; see shifts.txt in the output.\n");
    out
}
