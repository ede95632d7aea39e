//! The evaluation pipeline: qualifying solutions at the accuracy level,
//! per-run optima counting, success rate, average number of optima found,
//! the maximum peak ratio, and convergence-curve aggregation.

use crate::objective::{FunctionId, Objective};
use crate::swarm::{euclidean_distance, RunResult, Swarm, TracePoint};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Identifier of an optimizer known to the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgorithmId {
    Wsa,
    Ga,
    De,
    Pso,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 4] = [
        AlgorithmId::Wsa,
        AlgorithmId::Ga,
        AlgorithmId::De,
        AlgorithmId::Pso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Wsa => "wsa",
            AlgorithmId::Ga => "ga",
            AlgorithmId::De => "de",
            AlgorithmId::Pso => "pso",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgorithmId::ALL
            .iter()
            .copied()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected wsa, ga, de, or pso)"))
    }
}

/// A solution qualifies as a located global optimum when its fitness lies
/// strictly within `eps` of the target value.
pub fn is_global_optimum(fitness: f64, target: f64, eps: f64) -> bool {
    assert!(eps > 0.0, "accuracy level must be positive");
    (fitness - target).abs() < eps
}

/// The qualifying solutions of one final population, each assigned to its
/// nearest known optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimaAssignment {
    /// Solutions within the accuracy level of the target, as
    /// (position, fitness) pairs.
    pub qualifying: Vec<(Vec<f64>, f64)>,
    /// Best qualifying representative per covered optimum, keyed by the
    /// optimum index into [`Objective::optima_locations`].
    pub representatives: BTreeMap<usize, (Vec<f64>, f64)>,
}

impl OptimaAssignment {
    /// Number of distinct optima with at least one qualifying solution.
    pub fn covered_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Filter a final population by the accuracy gate and assign each survivor to
/// its nearest known optimum (ties keep the lowest optimum index). The
/// fitness filter is the sole qualification gate; there is no radius cutoff.
pub fn count_optima(final_pop: &Swarm, obj: &Objective) -> OptimaAssignment {
    let optima = obj.optima_locations();
    assert!(!optima.is_empty(), "{} has no known optima", obj.id());
    let mut qualifying = Vec::new();
    let mut representatives: BTreeMap<usize, (Vec<f64>, f64)> = BTreeMap::new();
    for whale in final_pop.iter() {
        if !is_global_optimum(whale.fitness, obj.target_value(), obj.accuracy()) {
            continue;
        }
        let mut nearest = 0;
        let mut nearest_d = f64::INFINITY;
        for (k, opt) in optima.iter().enumerate() {
            let d = euclidean_distance(&whale.position, opt);
            if d < nearest_d {
                nearest = k;
                nearest_d = d;
            }
        }
        qualifying.push((whale.position.clone(), whale.fitness));
        let entry = representatives
            .entry(nearest)
            .or_insert_with(|| (whale.position.clone(), whale.fitness));
        if whale.fitness < entry.1 {
            *entry = (whale.position.clone(), whale.fitness);
        }
    }
    OptimaAssignment {
        qualifying,
        representatives,
    }
}

/// Maximum peak ratio of one run: the covered-optima count over the summed
/// `fitness - target + 1` of the best representative at each covered peak.
/// Equal to 1 exactly when every representative sits at the target. `None`
/// when the run covered no optimum (a missing datum, not a zero).
pub fn mpr(assignment: &OptimaAssignment, obj: &Objective) -> Option<f64> {
    let q = assignment.representatives.len();
    if q == 0 {
        return None;
    }
    let denominator: f64 = assignment
        .representatives
        .values()
        .map(|(_, f)| f - obj.target_value() + 1.0)
        .sum();
    Some(q as f64 / denominator)
}

/// Quality ratio of a single solution against the target, on the same scale
/// as [`mpr`]: `1 / (fitness - target + 1)`, which is 1 when the solution
/// hits the target exactly and decays toward 0 as the gap grows.
pub fn peak_ratio_of_best(best_fitness: f64, target: f64) -> f64 {
    1.0 / (best_fitness - target + 1.0)
}

/// Fraction of runs that covered every global optimum.
pub fn success_rate(covered_counts: &[usize], num_optima: usize) -> f64 {
    assert!(!covered_counts.is_empty(), "success rate over zero runs");
    let hits = covered_counts.iter().filter(|&&c| c == num_optima).count();
    hits as f64 / covered_counts.len() as f64
}

/// Mean best-so-far fitness across runs at each checkpoint, with the last
/// value carried forward between trace points. Panics on an empty run list.
pub fn average_convergence(runs: &[RunResult], grid: &[u64]) -> Vec<TracePoint> {
    assert!(!runs.is_empty(), "cannot average zero runs");
    grid.iter()
        .map(|&evals| TracePoint {
            evals,
            fitness: runs.iter().map(|r| r.best_so_far_at(evals)).sum::<f64>()
                / runs.len() as f64,
        })
        .collect()
}

/// Mean population-average fitness across runs at each checkpoint.
pub fn average_population_fitness(runs: &[RunResult], grid: &[u64]) -> Vec<TracePoint> {
    assert!(!runs.is_empty(), "cannot average zero runs");
    grid.iter()
        .map(|&evals| TracePoint {
            evals,
            fitness: runs.iter().map(|r| r.pop_avg_at(evals)).sum::<f64>()
                / runs.len() as f64,
        })
        .collect()
}

/// Per-run record feeding the report files.
#[derive(Debug, Clone, PartialEq)]
pub struct RunStats {
    pub seed: u64,
    pub best_fitness: f64,
    pub covered_optima: usize,
    pub mpr: Option<f64>,
    pub evals_used: u64,
}

/// One point of the aggregated convergence export.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub evals: u64,
    pub mean_best: f64,
    pub mean_pop_avg: f64,
}

/// Aggregate over a batch of repeated runs of one (function, algorithm) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub function: FunctionId,
    pub algorithm: AlgorithmId,
    pub runs: Vec<RunResult>,
    pub per_run: Vec<RunStats>,
    /// Fraction of runs that covered all global optima.
    pub sr: f64,
    /// Mean number of distinct optima covered per run.
    pub anof: f64,
    /// Mean and population standard deviation of the per-run maximum peak
    /// ratio over the runs that covered at least one optimum.
    pub mpr_mean: Option<f64>,
    pub mpr_std: Option<f64>,
    pub mpr_qualified_runs: usize,
    pub best_mean: f64,
    pub best_std: f64,
    pub best_min: f64,
    /// Mean quality ratio of each run's best solution, defined for every run
    /// regardless of qualification.
    pub best_ratio_mean: f64,
    pub convergence: Vec<ConvergencePoint>,
}

impl ExperimentReport {
    pub fn from_runs(
        obj: &Objective,
        algorithm: AlgorithmId,
        runs: Vec<RunResult>,
        grid: &[u64],
    ) -> ExperimentReport {
        assert!(!runs.is_empty(), "a report needs at least one run");
        let per_run: Vec<RunStats> = runs
            .iter()
            .map(|run| {
                let assignment = count_optima(&run.final_population, obj);
                RunStats {
                    seed: run.seed,
                    best_fitness: run.best_fitness,
                    covered_optima: assignment.covered_count(),
                    mpr: mpr(&assignment, obj),
                    evals_used: run.evals_used,
                }
            })
            .collect();

        let covered: Vec<usize> = per_run.iter().map(|r| r.covered_optima).collect();
        let sr = success_rate(&covered, obj.num_global_optima());
        let anof = covered.iter().sum::<usize>() as f64 / covered.len() as f64;

        let mprs: Vec<f64> = per_run.iter().filter_map(|r| r.mpr).collect();
        let (mpr_mean, mpr_std) = if mprs.is_empty() {
            (None, None)
        } else {
            let (mean, std) = mean_std(&mprs);
            (Some(mean), Some(std))
        };

        let bests: Vec<f64> = per_run.iter().map(|r| r.best_fitness).collect();
        let (best_mean, best_std) = mean_std(&bests);
        let best_min = bests.iter().copied().fold(f64::INFINITY, f64::min);
        let best_ratio_mean = bests
            .iter()
            .map(|&b| peak_ratio_of_best(b, obj.target_value()))
            .sum::<f64>()
            / bests.len() as f64;

        let mean_best = average_convergence(&runs, grid);
        let mean_pop = average_population_fitness(&runs, grid);
        let convergence = mean_best
            .iter()
            .zip(&mean_pop)
            .map(|(b, p)| ConvergencePoint {
                evals: b.evals,
                mean_best: b.fitness,
                mean_pop_avg: p.fitness,
            })
            .collect();

        ExperimentReport {
            function: obj.id(),
            algorithm,
            runs,
            per_run,
            sr,
            anof,
            mpr_mean,
            mpr_std,
            mpr_qualified_runs: mprs.len(),
            best_mean,
            best_std,
            best_min,
            best_ratio_mean,
            convergence,
        }
    }
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}
