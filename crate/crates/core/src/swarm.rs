//! Population data model, the seeded random-number contract, Euclidean
//! geometry, and the evaluation-budget stopping rule shared by every
//! optimizer in this crate.

use crate::error::Error;
use crate::objective::Bounds;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A black-box minimization problem over a bounded box.
///
/// `value` must be pure; `x.len()` must equal `dimension()`.
pub trait Problem {
    fn dimension(&self) -> usize;
    fn bounds(&self) -> &Bounds;
    fn value(&self, x: &[f64]) -> f64;
}

/// A source of uniform draws. Implemented by [`RngStream`]; tests substitute
/// stub sources to pin an optimizer step at a draw extreme.
pub trait UniformSource {
    /// A draw from the closed interval `[lo, hi]`.
    fn uniform_in(&mut self, lo: f64, hi: f64) -> f64;
}

/// One seeded, replayable stream of random draws.
///
/// The generator is ChaCha8 seeded from a 64-bit value, so identical seeds
/// yield identical draw sequences on every platform. Each optimizer run owns
/// exactly one stream and draws in a documented order (initialization first,
/// then per-whale, per-dimension draws in loop order), which makes replays
/// bit-exact.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> RngStream {
        RngStream {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw from the closed interval `[lo, hi]`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        assert!(lo <= hi, "empty draw interval [{lo}, {hi}]");
        if lo == hi {
            return lo;
        }
        self.rng.random_range(lo..=hi)
    }

    /// Uniform draw from `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.random()
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "cannot draw an index from an empty range");
        self.rng.random_range(0..n)
    }
}

impl UniformSource for RngStream {
    fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo, hi)
    }
}

/// One candidate solution: a position and its cached objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Whale {
    pub position: Vec<f64>,
    pub fitness: f64,
}

/// An ordered population. Indices are identities: the order is fixed for the
/// lifetime of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Swarm {
    whales: Vec<Whale>,
}

impl Swarm {
    pub fn from_whales(whales: Vec<Whale>) -> Swarm {
        Swarm { whales }
    }

    pub fn len(&self) -> usize {
        self.whales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.whales.is_empty()
    }

    pub fn whale(&self, index: usize) -> &Whale {
        &self.whales[index]
    }

    pub fn whales(&self) -> &[Whale] {
        &self.whales
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Whale> {
        self.whales.iter()
    }

    /// Index of the lowest-fitness whale; the first one wins ties.
    pub fn best_index(&self) -> usize {
        assert!(!self.is_empty(), "empty swarm has no best whale");
        let mut best = 0;
        for i in 1..self.whales.len() {
            if self.whales[i].fitness < self.whales[best].fitness {
                best = i;
            }
        }
        best
    }

    pub fn best(&self) -> &Whale {
        self.whale(self.best_index())
    }

    pub(crate) fn replace(&mut self, index: usize, position: Vec<f64>, fitness: f64) {
        self.whales[index] = Whale { position, fitness };
    }

    pub(crate) fn fitness_sum(&self) -> f64 {
        self.whales.iter().map(|w| w.fitness).sum()
    }
}

/// The stopping criterion: a hard cap on objective evaluations. Every
/// evaluation goes through [`EvalBudget::evaluate`], which increments the
/// counter by exactly one, so `used` equals the number of objective calls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalBudget {
    max_evals: u64,
    used: u64,
}

impl EvalBudget {
    pub fn new(max_evals: u64) -> EvalBudget {
        assert!(max_evals > 0, "evaluation budget must be positive");
        EvalBudget { max_evals, used: 0 }
    }

    pub fn max_evals(&self) -> u64 {
        self.max_evals
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.max_evals - self.used
    }

    pub fn is_exhausted(&self) -> bool {
        self.used == self.max_evals
    }

    /// Evaluate `problem` at `x`, consuming one unit of budget.
    pub fn evaluate<P: Problem + ?Sized>(
        &mut self,
        problem: &P,
        x: &[f64],
    ) -> Result<f64, Error> {
        if self.is_exhausted() {
            return Err(Error::BudgetExhausted {
                max_evals: self.max_evals,
            });
        }
        self.used += 1;
        Ok(problem.value(x))
    }
}

/// Draw `size` whales uniformly inside the bounds (whale by whale, dimension
/// by dimension) and evaluate them all, consuming `size` budget units.
pub fn init_swarm<P: Problem + ?Sized>(
    problem: &P,
    size: usize,
    rng: &mut RngStream,
    budget: &mut EvalBudget,
) -> Result<Swarm, Error> {
    assert!(size > 0, "swarm size must be positive");
    if budget.remaining() < size as u64 {
        return Err(Error::BudgetTooSmall {
            pop_size: size,
            remaining: budget.remaining(),
        });
    }
    let bounds = problem.bounds();
    let dim = problem.dimension();
    let mut whales = Vec::with_capacity(size);
    for _ in 0..size {
        let position: Vec<f64> = (0..dim)
            .map(|d| rng.uniform(bounds.lower()[d], bounds.upper()[d]))
            .collect();
        let fitness = budget.evaluate(problem, &position)?;
        whales.push(Whale { position, fitness });
    }
    Ok(Swarm::from_whales(whales))
}

/// Euclidean distance. Panics when the slices differ in length.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "positions differ in dimension");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// One point of a per-run series, indexed by the evaluation count at which it
/// was observed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub evals: u64,
    pub fitness: f64,
}

/// Everything one optimizer execution leaves behind.
///
/// `trace` holds the best-so-far fitness as a step function: one point per
/// strict improvement plus a terminal point, so the value at any evaluation
/// count is recovered by carrying the last entry forward. `pop_avg_trace`
/// samples the population-mean fitness on a fixed grid of at most ~10,000
/// points starting when the initial population is complete.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub final_population: Swarm,
    pub trace: Vec<TracePoint>,
    pub pop_avg_trace: Vec<TracePoint>,
    pub seed: u64,
    pub evals_used: u64,
}

impl RunResult {
    /// Best-so-far fitness after `evals` evaluations (step interpolation).
    /// Panics before the first evaluation of the run.
    pub fn best_so_far_at(&self, evals: u64) -> f64 {
        step_value(&self.trace, evals)
    }

    /// Population-mean fitness at `evals` (step interpolation). Panics for
    /// checkpoints before the initial population was complete.
    pub fn pop_avg_at(&self, evals: u64) -> f64 {
        step_value(&self.pop_avg_trace, evals)
    }
}

fn step_value(trace: &[TracePoint], evals: u64) -> f64 {
    let idx = trace.partition_point(|p| p.evals <= evals);
    assert!(idx > 0, "no trace point at or before evaluation {evals}");
    trace[idx - 1].fitness
}

/// Shared bookkeeping for optimizer runs: best-so-far tracking, the
/// improvement trace, and the decimated population-average series.
pub(crate) struct RunRecorder {
    stride: u64,
    best_position: Vec<f64>,
    best_fitness: f64,
    trace: Vec<TracePoint>,
    pop_avg: Vec<TracePoint>,
}

impl RunRecorder {
    pub(crate) fn new(max_evals: u64) -> RunRecorder {
        RunRecorder {
            stride: max_evals.div_ceil(10_000).max(1),
            best_position: Vec::new(),
            best_fitness: f64::INFINITY,
            trace: Vec::new(),
            pop_avg: Vec::new(),
        }
    }

    /// Register one objective evaluation (the `used`-th of the run).
    pub(crate) fn on_eval(&mut self, used: u64, position: &[f64], fitness: f64) {
        if fitness < self.best_fitness {
            self.best_fitness = fitness;
            self.best_position.clear();
            self.best_position.extend_from_slice(position);
            self.trace.push(TracePoint {
                evals: used,
                fitness,
            });
        }
    }

    /// Replay the freshly initialized swarm as evaluations 1..=n, then record
    /// the first population-average sample.
    pub(crate) fn absorb_init(&mut self, swarm: &Swarm) {
        for (i, w) in swarm.iter().enumerate() {
            self.on_eval(i as u64 + 1, &w.position, w.fitness);
        }
        let n = swarm.len() as u64;
        self.push_pop_point(n, swarm.fitness_sum() / n as f64);
    }

    /// Record the population mean if `used` falls on the sampling grid.
    pub(crate) fn pop_sample(&mut self, used: u64, mean: f64) {
        if used.is_multiple_of(self.stride) {
            self.push_pop_point(used, mean);
        }
    }

    fn push_pop_point(&mut self, used: u64, mean: f64) {
        if let Some(last) = self.pop_avg.last_mut() {
            if last.evals == used {
                last.fitness = mean;
                return;
            }
        }
        self.pop_avg.push(TracePoint {
            evals: used,
            fitness: mean,
        });
    }

    pub(crate) fn finish(mut self, final_population: Swarm, seed: u64, evals_used: u64) -> RunResult {
        assert!(!self.trace.is_empty(), "a run records at least one evaluation");
        if self.trace.last().unwrap().evals != evals_used {
            self.trace.push(TracePoint {
                evals: evals_used,
                fitness: self.best_fitness,
            });
        }
        let n = final_population.len() as f64;
        self.push_pop_point(evals_used, final_population.fitness_sum() / n);
        RunResult {
            best_position: self.best_position,
            best_fitness: self.best_fitness,
            final_population,
            trace: self.trace,
            pop_avg_trace: self.pop_avg,
            seed,
            evals_used,
        }
    }
}
