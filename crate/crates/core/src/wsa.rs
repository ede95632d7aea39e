//! The whale swarm optimizer: exponential intensity attenuation, the
//! better-and-nearest guide search, guided random movement, and the
//! asynchronous main loop.
//!
//! Each whale is guided by its nearest strictly-better neighbor. The scale of
//! the random step decays exponentially with the distance to the guide, so
//! nearby guides attract aggressively while far-away guides barely perturb
//! the whale. Whales with no better neighbor (the current best, and anything
//! tied with it) do not move, which is the only form of elitism in the loop.

use crate::error::Error;
use crate::objective::Bounds;
use crate::swarm::{
    euclidean_distance, init_swarm, EvalBudget, Problem, RngStream, RunRecorder, RunResult,
    Swarm, UniformSource, Whale,
};

/// Intensity at the source when no override is given.
pub const DEFAULT_RHO0: f64 = 2.0;

/// Control parameters of one whale-swarm run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WsaParams {
    /// Intensity at the source of the ultrasound.
    pub rho0: f64,
    /// Attenuation coefficient; larger values shrink movement toward distant
    /// guides. This is the single tuning knob of the algorithm.
    pub eta: f64,
    pub pop_size: usize,
    pub max_evals: u64,
}

impl WsaParams {
    pub fn new(eta: f64, pop_size: usize, max_evals: u64) -> WsaParams {
        WsaParams {
            rho0: DEFAULT_RHO0,
            eta,
            pop_size,
            max_evals,
        }
    }

    /// Parameters with the attenuation coefficient derived from the bounds
    /// via [`default_eta`].
    pub fn for_bounds(bounds: &Bounds, pop_size: usize, max_evals: u64) -> WsaParams {
        WsaParams::new(default_eta(bounds), pop_size, max_evals)
    }
}

/// Ultrasound intensity `rho0 * exp(-eta * d)` at distance `d` from the
/// source. Panics on a negative distance.
pub fn intensity(rho0: f64, eta: f64, d: f64) -> f64 {
    assert!(d >= 0.0, "distance must be non-negative, got {d}");
    rho0 * (-eta * d).exp()
}

/// Starting attenuation coefficient for a search box: `20 ln(4) / d_max`,
/// chosen so that a guide at one twentieth of the box diagonal yields an
/// intensity of 0.5 when `rho0` is 2.
pub fn default_eta(bounds: &Bounds) -> f64 {
    20.0 * 4.0_f64.ln() / bounds.d_max()
}

/// The index of the whale that guides whale `u`: the strictly-better whale at
/// minimum Euclidean distance, or `None` when no whale has a strictly better
/// fitness. Exact distance ties keep the lowest index.
pub fn better_nearest(swarm: &Swarm, u: usize) -> Option<usize> {
    assert!(u < swarm.len(), "whale index {u} out of range");
    let here = swarm.whale(u);
    let mut guide = None;
    let mut nearest = f64::INFINITY;
    for (i, other) in swarm.iter().enumerate() {
        if i == u || other.fitness >= here.fitness {
            continue;
        }
        let d = euclidean_distance(&other.position, &here.position);
        if d < nearest {
            guide = Some(i);
            nearest = d;
        }
    }
    guide
}

/// One guided random move of whale `x` toward whale `y`: every coordinate
/// steps by an independent draw from `[0, rho]` times the gap to the guide,
/// where `rho` is the received intensity. The result is clamped into the
/// bounds; evaluating it is the caller's job.
pub fn move_whale<R: UniformSource + ?Sized>(
    x: &Whale,
    y: &Whale,
    params: &WsaParams,
    rng: &mut R,
    bounds: &Bounds,
) -> Vec<f64> {
    let d = euclidean_distance(&x.position, &y.position);
    let rho = intensity(params.rho0, params.eta, d);
    let mut position = x.position.clone();
    for (p, target) in position.iter_mut().zip(&y.position) {
        let r = rng.uniform_in(0.0, rho);
        *p += r * (target - *p);
    }
    bounds.clamp(&mut position);
    position
}

/// Run the whale swarm optimizer until the evaluation budget is exhausted.
pub fn run_wsa<P: Problem + ?Sized>(
    problem: &P,
    params: &WsaParams,
    seed: u64,
) -> Result<RunResult, Error> {
    run_wsa_observed(problem, params, seed, |_, _| {})
}

/// [`run_wsa`] with an observation hook, called with the swarm state after
/// initialization and after every accepted move (evaluation). Useful for
/// instrumentation; the hook does not influence the run.
pub fn run_wsa_observed<P, F>(
    problem: &P,
    params: &WsaParams,
    seed: u64,
    mut observe: F,
) -> Result<RunResult, Error>
where
    P: Problem + ?Sized,
    F: FnMut(&Swarm, u64),
{
    assert!(params.pop_size > 0, "population size must be positive");
    assert!(params.rho0 > 0.0, "rho0 must be positive");
    assert!(params.eta > 0.0, "eta must be positive");
    if params.max_evals < params.pop_size as u64 {
        return Err(Error::BudgetTooSmall {
            pop_size: params.pop_size,
            remaining: params.max_evals,
        });
    }

    let mut rng = RngStream::new(seed);
    let mut budget = EvalBudget::new(params.max_evals);
    let mut recorder = RunRecorder::new(params.max_evals);
    let mut swarm = init_swarm(problem, params.pop_size, &mut rng, &mut budget)?;
    recorder.absorb_init(&swarm);
    observe(&swarm, budget.used());

    let n = swarm.len();
    let mut fitness_sum = swarm.fitness_sum();
    // Whales are swept in index order and each move is evaluated in place, so
    // later whales in a sweep react to earlier moves (no generation snapshot)
    // and a move is kept even when it worsens the whale.
    'sweeps: while !budget.is_exhausted() {
        let mut moved = false;
        for u in 0..n {
            if budget.is_exhausted() {
                break 'sweeps;
            }
            let Some(v) = better_nearest(&swarm, u) else {
                continue;
            };
            let position = move_whale(
                swarm.whale(u),
                swarm.whale(v),
                params,
                &mut rng,
                problem.bounds(),
            );
            let fitness = budget
                .evaluate(problem, &position)
                .expect("budget was checked before the move");
            fitness_sum += fitness - swarm.whale(u).fitness;
            swarm.replace(u, position, fitness);
            moved = true;
            recorder.on_eval(budget.used(), &swarm.whale(u).position, fitness);
            recorder.pop_sample(budget.used(), fitness_sum / n as f64);
            observe(&swarm, budget.used());
        }
        if !moved {
            // Every whale is tied at the same fitness: no guide exists for
            // anyone, and further sweeps would spin without evaluating.
            break;
        }
    }

    Ok(recorder.finish(swarm, seed, budget.used()))
}
