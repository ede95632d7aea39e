//! Experiment orchestration: built-in parameter presets, batch execution of
//! seeded runs (optionally in parallel), and CSV/plain-text report emission.

use crate::baselines::{run_de_best_1_bin, run_ga, run_pso_inertia, DeParams, GaParams, PsoParams};
use crate::error::Error;
use crate::metrics::{AlgorithmId, ExperimentReport};
use crate::objective::{make_shifted, FunctionId, Objective, ShiftRecord};
use crate::swarm::RunResult;
use crate::wsa::{run_wsa, WsaParams, DEFAULT_RHO0};
use rayon::prelude::*;
use serde::Deserialize;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error as ThisError;

/// Per-function experiment settings: accuracy level, population size,
/// evaluation budget, and the tuned attenuation coefficient for the whale
/// swarm optimizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionPreset {
    pub id: FunctionId,
    pub eps: f64,
    pub pop_size: usize,
    pub max_evals: u64,
    pub wsa_eta: f64,
}

pub const FUNCTION_PRESETS: [FunctionPreset; 12] = [
    FunctionPreset { id: FunctionId::F1, eps: 0.01, pop_size: 100, max_evals: 10_000, wsa_eta: 40.0 },
    FunctionPreset { id: FunctionId::F2, eps: 1e-6, pop_size: 100, max_evals: 10_000, wsa_eta: 40.0 },
    FunctionPreset { id: FunctionId::F3, eps: 0.05, pop_size: 100, max_evals: 10_000, wsa_eta: 1.55 },
    FunctionPreset { id: FunctionId::F4, eps: 0.001, pop_size: 100, max_evals: 10_000, wsa_eta: 5.5 },
    FunctionPreset { id: FunctionId::F5, eps: 0.05, pop_size: 300, max_evals: 100_000, wsa_eta: 0.6 },
    FunctionPreset { id: FunctionId::F6, eps: 0.002, pop_size: 200, max_evals: 20_000, wsa_eta: 1.5 },
    FunctionPreset { id: FunctionId::F7, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 7.5e-3 },
    FunctionPreset { id: FunctionId::F8, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 2.2e-3 },
    FunctionPreset { id: FunctionId::F9, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 5e-3 },
    FunctionPreset { id: FunctionId::F10, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 6.5e-2 },
    FunctionPreset { id: FunctionId::F11, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 5e-3 },
    FunctionPreset { id: FunctionId::F12, eps: 0.001, pop_size: 100, max_evals: 500_000, wsa_eta: 6.5e-2 },
];

pub fn preset_for(id: FunctionId) -> &'static FunctionPreset {
    &FUNCTION_PRESETS[FunctionId::ALL.iter().position(|&f| f == id).unwrap()]
}

/// Default algorithm constants shared by every function.
pub mod algo_defaults {
    pub const GA_CROSSOVER_PROB: f64 = 0.95;
    pub const GA_MUTATION_PROB: f64 = 0.05;
    pub const DE_CROSSOVER_PROB: f64 = 0.7;
    pub const DE_SCALE_FACTOR: f64 = 0.5;
    pub const PSO_INERTIA: f64 = 0.729844;
    pub const PSO_COGNITIVE: f64 = 2.0;
    pub const PSO_SOCIAL: f64 = 2.0;
}

pub const DEFAULT_RUNS: usize = 25;
pub const DEFAULT_BASE_SEED: u64 = 42;
pub const DEFAULT_SHIFT_SEED: u64 = 7;

/// A fully resolved experiment: one (function, algorithm) pair, a batch of
/// seeded runs, and everything the optimizers need.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub function: FunctionId,
    pub algorithm: AlgorithmId,
    pub pop_size: usize,
    pub max_evals: u64,
    pub eps: f64,
    pub runs: usize,
    pub base_seed: u64,
    /// Seed of the landscape shift for F7-F12; kept separate from the run
    /// seeds so every algorithm sees the same shifted landscape.
    pub shift_seed: u64,
    /// Worker threads for the run batch; 0 means one per core.
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub rho0: f64,
    pub eta: f64,
    pub ga_crossover_prob: f64,
    pub ga_mutation_prob: f64,
    pub de_crossover_prob: f64,
    pub de_scale_factor: f64,
    pub pso_inertia: f64,
    pub pso_cognitive: f64,
    pub pso_social: f64,
}

impl ExperimentConfig {
    /// The built-in preset for a (function, algorithm) pair.
    pub fn preset(function: FunctionId, algorithm: AlgorithmId) -> ExperimentConfig {
        let p = preset_for(function);
        ExperimentConfig {
            function,
            algorithm,
            pop_size: p.pop_size,
            max_evals: p.max_evals,
            eps: p.eps,
            runs: DEFAULT_RUNS,
            base_seed: DEFAULT_BASE_SEED,
            shift_seed: DEFAULT_SHIFT_SEED,
            jobs: 0,
            out_dir: PathBuf::from("."),
            rho0: DEFAULT_RHO0,
            eta: p.wsa_eta,
            ga_crossover_prob: algo_defaults::GA_CROSSOVER_PROB,
            ga_mutation_prob: algo_defaults::GA_MUTATION_PROB,
            de_crossover_prob: algo_defaults::DE_CROSSOVER_PROB,
            de_scale_factor: algo_defaults::DE_SCALE_FACTOR,
            pso_inertia: algo_defaults::PSO_INERTIA,
            pso_cognitive: algo_defaults::PSO_COGNITIVE,
            pso_social: algo_defaults::PSO_SOCIAL,
        }
    }

    /// The objective this experiment optimizes: shifted for F7-F12 (seeded by
    /// `shift_seed`), plain for F1-F6, with the configured accuracy level.
    pub fn objective(&self) -> Objective {
        let obj = if self.function.is_shiftable() {
            make_shifted(
                self.function,
                self.function.default_dimension(),
                self.shift_seed,
            )
            .expect("F7-F12 are shiftable")
        } else {
            Objective::standard(self.function)
        };
        obj.with_accuracy(self.eps)
    }

    fn wsa_params(&self) -> WsaParams {
        WsaParams {
            rho0: self.rho0,
            eta: self.eta,
            pop_size: self.pop_size,
            max_evals: self.max_evals,
        }
    }

    fn ga_params(&self) -> GaParams {
        GaParams {
            pop_size: self.pop_size,
            max_evals: self.max_evals,
            crossover_prob: self.ga_crossover_prob,
            mutation_prob: self.ga_mutation_prob,
        }
    }

    fn de_params(&self) -> DeParams {
        DeParams {
            pop_size: self.pop_size,
            max_evals: self.max_evals,
            crossover_prob: self.de_crossover_prob,
            scale_factor: self.de_scale_factor,
        }
    }

    fn pso_params(&self) -> PsoParams {
        PsoParams {
            pop_size: self.pop_size,
            max_evals: self.max_evals,
            inertia: self.pso_inertia,
            cognitive: self.pso_cognitive,
            social: self.pso_social,
        }
    }
}

/// Errors surfaced by the harness, split by how the caller should exit.
#[derive(Debug, ThisError)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl From<Error> for HarnessError {
    fn from(err: Error) -> HarnessError {
        HarnessError::Config(err.to_string())
    }
}

/// Partial configuration collected from a config file and/or command-line
/// flags. Unset fields fall back to the built-in presets.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverlay {
    pub function: Option<String>,
    pub algorithm: Option<String>,
    pub pop: Option<usize>,
    pub evals: Option<u64>,
    pub eps: Option<f64>,
    pub runs: Option<usize>,
    pub seed: Option<u64>,
    pub shift_seed: Option<u64>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub wsa: Option<WsaOverlay>,
    pub ga: Option<GaOverlay>,
    pub de: Option<DeOverlay>,
    pub pso: Option<PsoOverlay>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WsaOverlay {
    pub eta: Option<f64>,
    pub rho0: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaOverlay {
    pub pc: Option<f64>,
    pub pm: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeOverlay {
    pub pc: Option<f64>,
    pub f: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsoOverlay {
    pub omega: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
}

impl ConfigOverlay {
    /// Layer `other` on top of `self`; set fields in `other` win.
    pub fn merged_with(mut self, other: ConfigOverlay) -> ConfigOverlay {
        fn pick<T>(base: &mut Option<T>, over: Option<T>) {
            if over.is_some() {
                *base = over;
            }
        }
        pick(&mut self.function, other.function);
        pick(&mut self.algorithm, other.algorithm);
        pick(&mut self.pop, other.pop);
        pick(&mut self.evals, other.evals);
        pick(&mut self.eps, other.eps);
        pick(&mut self.runs, other.runs);
        pick(&mut self.seed, other.seed);
        pick(&mut self.shift_seed, other.shift_seed);
        pick(&mut self.jobs, other.jobs);
        pick(&mut self.out, other.out);
        if let Some(over) = other.wsa {
            let base = self.wsa.get_or_insert_with(WsaOverlay::default);
            pick(&mut base.eta, over.eta);
            pick(&mut base.rho0, over.rho0);
        }
        if let Some(over) = other.ga {
            let base = self.ga.get_or_insert_with(GaOverlay::default);
            pick(&mut base.pc, over.pc);
            pick(&mut base.pm, over.pm);
        }
        if let Some(over) = other.de {
            let base = self.de.get_or_insert_with(DeOverlay::default);
            pick(&mut base.pc, over.pc);
            pick(&mut base.f, over.f);
        }
        if let Some(over) = other.pso {
            let base = self.pso.get_or_insert_with(PsoOverlay::default);
            pick(&mut base.omega, over.omega);
            pick(&mut base.c1, over.c1);
            pick(&mut base.c2, over.c2);
        }
        self
    }

    /// Resolve against the built-in presets. `function` and `algorithm` are
    /// the only required fields.
    pub fn resolve(&self) -> Result<ExperimentConfig, HarnessError> {
        let function: FunctionId = self
            .function
            .as_deref()
            .ok_or_else(|| HarnessError::Config("missing function id (e.g. F3)".into()))?
            .parse()
            .map_err(HarnessError::Config)?;
        let algorithm: AlgorithmId = self
            .algorithm
            .as_deref()
            .ok_or_else(|| HarnessError::Config("missing algorithm (wsa, ga, de, or pso)".into()))?
            .parse()
            .map_err(HarnessError::Config)?;
        let mut config = ExperimentConfig::preset(function, algorithm);
        if let Some(pop) = self.pop {
            if pop == 0 {
                return Err(HarnessError::Config("population size must be positive".into()));
            }
            config.pop_size = pop;
        }
        if let Some(evals) = self.evals {
            config.max_evals = evals;
        }
        if let Some(eps) = self.eps {
            if eps <= 0.0 {
                return Err(HarnessError::Config("eps must be positive".into()));
            }
            config.eps = eps;
        }
        if let Some(runs) = self.runs {
            if runs == 0 {
                return Err(HarnessError::Config("runs must be positive".into()));
            }
            config.runs = runs;
        }
        if let Some(seed) = self.seed {
            config.base_seed = seed;
        }
        if let Some(seed) = self.shift_seed {
            config.shift_seed = seed;
        }
        if let Some(jobs) = self.jobs {
            config.jobs = jobs;
        }
        if let Some(out) = &self.out {
            config.out_dir = out.clone();
        }
        if let Some(wsa) = &self.wsa {
            if let Some(eta) = wsa.eta {
                if eta <= 0.0 {
                    return Err(HarnessError::Config("eta must be positive".into()));
                }
                config.eta = eta;
            }
            if let Some(rho0) = wsa.rho0 {
                if rho0 <= 0.0 {
                    return Err(HarnessError::Config("rho0 must be positive".into()));
                }
                config.rho0 = rho0;
            }
        }
        if let Some(ga) = &self.ga {
            if let Some(pc) = ga.pc {
                config.ga_crossover_prob = pc;
            }
            if let Some(pm) = ga.pm {
                config.ga_mutation_prob = pm;
            }
        }
        if let Some(de) = &self.de {
            if let Some(pc) = de.pc {
                config.de_crossover_prob = pc;
            }
            if let Some(f) = de.f {
                config.de_scale_factor = f;
            }
        }
        if let Some(pso) = &self.pso {
            if let Some(omega) = pso.omega {
                config.pso_inertia = omega;
            }
            if let Some(c1) = pso.c1 {
                config.pso_cognitive = c1;
            }
            if let Some(c2) = pso.c2 {
                config.pso_social = c2;
            }
        }
        Ok(config)
    }
}

/// The checkpoint grid used for convergence exports: the end of
/// initialization, then every `ceil(max_evals / 10000)`-th evaluation, and
/// the final evaluation.
pub fn convergence_grid(pop_size: usize, max_evals: u64) -> Vec<u64> {
    let stride = max_evals.div_ceil(10_000).max(1);
    let first = pop_size as u64;
    let mut grid = vec![first];
    let mut e = first.div_ceil(stride) * stride;
    if e == first {
        e += stride;
    }
    while e < max_evals {
        grid.push(e);
        e += stride;
    }
    if max_evals > first {
        grid.push(max_evals);
    }
    grid
}

/// Execute the configured batch of runs (run `k` is seeded with
/// `base_seed + k`) and aggregate the metrics. No files are written.
pub fn run_batch(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let obj = config.objective();
    let run_one = |k: usize| -> Result<RunResult, Error> {
        let seed = config.base_seed.wrapping_add(k as u64);
        match config.algorithm {
            AlgorithmId::Wsa => run_wsa(&obj, &config.wsa_params(), seed),
            AlgorithmId::Ga => run_ga(&obj, &config.ga_params(), seed),
            AlgorithmId::De => run_de_best_1_bin(&obj, &config.de_params(), seed),
            AlgorithmId::Pso => run_pso_inertia(&obj, &config.pso_params(), seed),
        }
    };

    let results: Result<Vec<RunResult>, Error> = if config.jobs == 1 {
        (0..config.runs).map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| HarnessError::Config(format!("cannot build thread pool: {e}")))?;
        pool.install(|| (0..config.runs).into_par_iter().map(run_one).collect())
    };

    let grid = convergence_grid(config.pop_size, config.max_evals);
    Ok(ExperimentReport::from_runs(
        &obj,
        config.algorithm,
        results?,
        &grid,
    ))
}

/// Paths of everything [`run_experiment`] wrote, plus the report itself.
#[derive(Debug)]
pub struct ReportFiles {
    pub summary: PathBuf,
    pub runs: PathBuf,
    pub convergence: PathBuf,
    pub shifts: Option<PathBuf>,
    pub report: ExperimentReport,
    pub wall_time_s: f64,
}

/// Run the batch and write `summary.csv`, `runs.csv`, `convergence.csv`, and
/// (for shifted functions) `shifts.txt` into the configured output directory.
///
/// Re-running the same configuration reproduces the numeric content of every
/// file byte for byte; the only exception is the wall-time column of the
/// summary, which reports the measured duration.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ReportFiles, HarnessError> {
    let started = Instant::now();
    let report = run_batch(config)?;
    let wall_time_s = started.elapsed().as_secs_f64();

    fs::create_dir_all(&config.out_dir).map_err(|source| HarnessError::Io {
        path: config.out_dir.clone(),
        source,
    })?;

    let summary = config.out_dir.join("summary.csv");
    write_summary(&summary, &report, wall_time_s)?;
    let runs = config.out_dir.join("runs.csv");
    write_runs(&runs, &report)?;
    let convergence = config.out_dir.join("convergence.csv");
    emit_convergence(&report, &convergence)?;

    let shifts = match config.objective().shift() {
        Some(shift) => {
            let path = config.out_dir.join("shifts.txt");
            let record = ShiftRecord {
                id: config.function,
                seed: config.shift_seed,
                shift: shift.to_vec(),
            };
            write_shift_records(&path, std::slice::from_ref(&record))?;
            Some(path)
        }
        None => None,
    };

    Ok(ReportFiles {
        summary,
        runs,
        convergence,
        shifts,
        report,
        wall_time_s,
    })
}

/// 17 significant digits: parses back to the identical 64-bit value.
fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_sig17(v: Option<f64>) -> String {
    v.map(sig17).unwrap_or_default()
}

fn create(path: &Path) -> Result<BufWriter<File>, HarnessError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn finish(mut w: BufWriter<File>, path: &Path) -> Result<(), HarnessError> {
    w.flush().map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_summary(
    path: &Path,
    report: &ExperimentReport,
    wall_time_s: f64,
) -> Result<(), HarnessError> {
    let mut w = create(path)?;
    let io = |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    };
    writeln!(
        w,
        "function,algorithm,runs,sr,anof,mpr_mean,mpr_std,mpr_qualified_runs,\
         best_mean,best_std,best_min,best_ratio_mean,wall_time_s"
    )
    .map_err(io)?;
    writeln!(
        w,
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        report.function,
        report.algorithm,
        report.runs.len(),
        sig17(report.sr),
        sig17(report.anof),
        opt_sig17(report.mpr_mean),
        opt_sig17(report.mpr_std),
        report.mpr_qualified_runs,
        sig17(report.best_mean),
        sig17(report.best_std),
        sig17(report.best_min),
        sig17(report.best_ratio_mean),
        sig17(wall_time_s),
    )
    .map_err(io)?;
    finish(w, path)
}

fn write_runs(path: &Path, report: &ExperimentReport) -> Result<(), HarnessError> {
    let mut w = create(path)?;
    let io = |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    };
    writeln!(w, "run,seed,best_fitness,covered_optima,mpr,evals_used").map_err(io)?;
    for (k, r) in report.per_run.iter().enumerate() {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            k,
            r.seed,
            sig17(r.best_fitness),
            r.covered_optima,
            opt_sig17(r.mpr),
            r.evals_used,
        )
        .map_err(io)?;
    }
    finish(w, path)
}

/// Write the plot-ready convergence series: one row per checkpoint, with the
/// mean best-so-far and the mean population-average fitness.
pub fn emit_convergence(report: &ExperimentReport, path: &Path) -> Result<(), HarnessError> {
    let mut w = create(path)?;
    let io = |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    };
    writeln!(w, "evals,mean_best,mean_pop_avg").map_err(io)?;
    for p in &report.convergence {
        writeln!(
            w,
            "{},{},{}",
            p.evals,
            sig17(p.mean_best),
            sig17(p.mean_pop_avg)
        )
        .map_err(io)?;
    }
    finish(w, path)
}

/// Persist shift records, one per line.
pub fn write_shift_records(path: &Path, records: &[ShiftRecord]) -> Result<(), HarnessError> {
    let mut w = create(path)?;
    for record in records {
        writeln!(w, "{}", record.to_line()).map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })?;
    }
    finish(w, path)
}

/// Read back a shift record file written by [`write_shift_records`].
pub fn read_shift_records(path: &Path) -> Result<Vec<ShiftRecord>, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| ShiftRecord::parse_line(line).map_err(HarnessError::Config))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_pin_the_published_settings() {
        // Literal transcription: (eps, pop, evals) per function and the
        // per-function attenuation coefficient.
        let expected: [(FunctionId, f64, usize, u64, f64); 12] = [
            (FunctionId::F1, 0.01, 100, 10_000, 40.0),
            (FunctionId::F2, 0.000001, 100, 10_000, 40.0),
            (FunctionId::F3, 0.05, 100, 10_000, 1.55),
            (FunctionId::F4, 0.001, 100, 10_000, 5.5),
            (FunctionId::F5, 0.05, 300, 100_000, 0.6),
            (FunctionId::F6, 0.002, 200, 20_000, 1.5),
            (FunctionId::F7, 0.001, 100, 500_000, 7.5e-3),
            (FunctionId::F8, 0.001, 100, 500_000, 2.2e-3),
            (FunctionId::F9, 0.001, 100, 500_000, 5e-3),
            (FunctionId::F10, 0.001, 100, 500_000, 6.5e-2),
            (FunctionId::F11, 0.001, 100, 500_000, 5e-3),
            (FunctionId::F12, 0.001, 100, 500_000, 6.5e-2),
        ];
        assert_eq!(FUNCTION_PRESETS.len(), 12);
        for (id, eps, pop, evals, eta) in expected {
            let p = preset_for(id);
            assert_eq!(p.eps, eps, "{id} eps");
            assert_eq!(p.pop_size, pop, "{id} pop");
            assert_eq!(p.max_evals, evals, "{id} evals");
            assert_eq!(p.wsa_eta, eta, "{id} eta");
            assert_eq!(Objective::standard(id).accuracy(), eps, "{id} accuracy");
        }
        assert_eq!(algo_defaults::GA_CROSSOVER_PROB, 0.95);
        assert_eq!(algo_defaults::GA_MUTATION_PROB, 0.05);
        assert_eq!(algo_defaults::DE_CROSSOVER_PROB, 0.7);
        assert_eq!(algo_defaults::DE_SCALE_FACTOR, 0.5);
        assert_eq!(algo_defaults::PSO_INERTIA, 0.729844);
        assert_eq!(algo_defaults::PSO_COGNITIVE, 2.0);
        assert_eq!(algo_defaults::PSO_SOCIAL, 2.0);
    }

    #[test]
    fn overlay_resolution_fills_presets_and_honors_overrides() {
        let file: ConfigOverlay = toml::from_str(
            r#"
            function = "F3"
            algorithm = "wsa"
            runs = 5

            [wsa]
            eta = 2.0
            "#,
        )
        .unwrap();
        let flags = ConfigOverlay {
            function: Some("F2".into()),
            ..ConfigOverlay::default()
        };
        let config = file.merged_with(flags).resolve().unwrap();
        assert_eq!(config.function, FunctionId::F2);
        assert_eq!(config.pop_size, 100);
        assert_eq!(config.max_evals, 10_000);
        assert_eq!(config.eps, 1e-6);
        assert_eq!(config.runs, 5);
        assert_eq!(config.eta, 2.0);
        assert_eq!(config.rho0, DEFAULT_RHO0);
    }

    #[test]
    fn resolution_requires_function_and_algorithm() {
        let err = ConfigOverlay::default().resolve().unwrap_err();
        assert!(matches!(err, HarnessError::Config(_)));
        let bad = ConfigOverlay {
            function: Some("F1".into()),
            algorithm: Some("annealing".into()),
            ..ConfigOverlay::default()
        };
        assert!(matches!(bad.resolve(), Err(HarnessError::Config(_))));
    }

    #[test]
    fn convergence_grid_is_strictly_increasing_and_bounded() {
        for (pop, evals) in [(100usize, 10_000u64), (300, 100_000), (100, 500_000), (7, 7)] {
            let grid = convergence_grid(pop, evals);
            assert_eq!(grid[0], pop as u64);
            assert_eq!(*grid.last().unwrap(), evals);
            assert!(grid.len() <= 10_002);
            for pair in grid.windows(2) {
                assert!(pair[1] > pair[0]);
            }
        }
    }

    #[test]
    fn single_run_batches_report_the_seeded_initial_best() {
        let mut config = ExperimentConfig::preset(FunctionId::F4, AlgorithmId::Wsa);
        config.runs = 1;
        config.pop_size = 40;
        config.max_evals = 40;
        config.jobs = 1;
        let report = run_batch(&config).unwrap();
        let run = &report.runs[0];
        assert_eq!(run.seed, config.base_seed);
        assert_eq!(run.evals_used, 40);
        assert_eq!(report.best_min, run.best_fitness);
    }

    #[test]
    fn parallel_and_sequential_batches_agree() {
        let mut config = ExperimentConfig::preset(FunctionId::F3, AlgorithmId::De);
        config.runs = 6;
        config.max_evals = 3_000;
        config.jobs = 1;
        let sequential = run_batch(&config).unwrap();
        config.jobs = 4;
        let parallel = run_batch(&config).unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn reports_are_deterministic_per_config() {
        let mut config = ExperimentConfig::preset(FunctionId::F2, AlgorithmId::Ga);
        config.runs = 4;
        config.max_evals = 2_000;
        let a = run_batch(&config).unwrap();
        let b = run_batch(&config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn experiment_files_reproduce_byte_identically() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ExperimentConfig::preset(FunctionId::F9, AlgorithmId::Wsa);
        config.runs = 2;
        config.max_evals = 1_000;
        config.pop_size = 20;
        config.out_dir = dir.path().join("a");
        let first = run_experiment(&config).unwrap();
        config.out_dir = dir.path().join("b");
        let second = run_experiment(&config).unwrap();

        for (x, y) in [
            (&first.runs, &second.runs),
            (&first.convergence, &second.convergence),
            (first.shifts.as_ref().unwrap(), second.shifts.as_ref().unwrap()),
        ] {
            assert_eq!(fs::read(x).unwrap(), fs::read(y).unwrap());
        }
        // The summary matches except for the trailing wall-time column.
        let strip = |p: &Path| {
            let text = fs::read_to_string(p).unwrap();
            text.lines()
                .map(|l| l.rsplit_once(',').unwrap().0.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&first.summary), strip(&second.summary));
    }

    #[test]
    fn shift_files_round_trip_and_replay_the_landscape() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ExperimentConfig::preset(FunctionId::F10, AlgorithmId::Wsa);
        config.runs = 1;
        config.max_evals = 200;
        config.pop_size = 10;
        config.out_dir = dir.path().to_path_buf();
        let files = run_experiment(&config).unwrap();
        let records = read_shift_records(files.shifts.as_ref().unwrap()).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].id, FunctionId::F10);
        assert_eq!(records[0].seed, config.shift_seed);
        let replayed = Objective::shifted_with(records[0].id, records[0].shift.clone()).unwrap();
        assert_eq!(replayed.shift(), config.objective().shift());
    }

    #[test]
    fn missing_mpr_is_an_empty_csv_field() {
        let dir = tempfile::tempdir().unwrap();
        // A tiny budget on a hard function: no run qualifies, so the MPR
        // columns stay empty rather than reporting zero.
        let mut config = ExperimentConfig::preset(FunctionId::F7, AlgorithmId::Ga);
        config.runs = 2;
        config.pop_size = 10;
        config.max_evals = 100;
        config.out_dir = dir.path().to_path_buf();
        let files = run_experiment(&config).unwrap();
        assert_eq!(files.report.mpr_qualified_runs, 0);
        let summary = fs::read_to_string(&files.summary).unwrap();
        let row = summary.lines().nth(1).unwrap();
        assert!(row.contains(",,"), "empty mpr fields expected: {row}");
    }
}
