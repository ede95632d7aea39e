//! Three classical comparison optimizers sharing the budget and RNG
//! contracts: a real-coded generational GA, DE/best/1/bin, and global-best
//! PSO with a constant inertia weight.

use crate::error::Error;
use crate::swarm::{
    init_swarm, EvalBudget, Problem, RngStream, RunRecorder, RunResult, Swarm, Whale,
};

/// Real-coded GA: tournament selection, arithmetic crossover, per-gene
/// uniform-reset mutation, and a single elite carried over each generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaParams {
    pub pop_size: usize,
    pub max_evals: u64,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
}

impl GaParams {
    pub fn new(pop_size: usize, max_evals: u64) -> GaParams {
        GaParams {
            pop_size,
            max_evals,
            crossover_prob: 0.95,
            mutation_prob: 0.05,
        }
    }
}

/// DE/best/1/bin: the donor perturbs the current best with one scaled
/// difference vector; binomial crossover; greedy selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeParams {
    pub pop_size: usize,
    pub max_evals: u64,
    pub crossover_prob: f64,
    pub scale_factor: f64,
}

impl DeParams {
    pub fn new(pop_size: usize, max_evals: u64) -> DeParams {
        DeParams {
            pop_size,
            max_evals,
            crossover_prob: 0.7,
            scale_factor: 0.5,
        }
    }
}

/// Global-best PSO with a constant inertia weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub pop_size: usize,
    pub max_evals: u64,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
}

impl PsoParams {
    pub fn new(pop_size: usize, max_evals: u64) -> PsoParams {
        PsoParams {
            pop_size,
            max_evals,
            inertia: 0.729844,
            cognitive: 2.0,
            social: 2.0,
        }
    }
}

fn check_budget(pop_size: usize, max_evals: u64) -> Result<(), Error> {
    if max_evals < pop_size as u64 {
        return Err(Error::BudgetTooSmall {
            pop_size,
            remaining: max_evals,
        });
    }
    Ok(())
}

/// Run DE/best/1/bin until the budget is exhausted.
///
/// Per target, the draw order is: the two distinct difference indices, the
/// guaranteed crossover dimension, then one crossover draw per dimension.
/// Trial vectors are clamped into the bounds before evaluation and replace
/// their target when not worse, so per-slot fitness never increases.
pub fn run_de_best_1_bin<P: Problem + ?Sized>(
    problem: &P,
    params: &DeParams,
    seed: u64,
) -> Result<RunResult, Error> {
    if params.pop_size < 4 {
        return Err(Error::PopulationTooSmall {
            algo: "DE/best/1/bin",
            min: 4,
            got: params.pop_size,
        });
    }
    check_budget(params.pop_size, params.max_evals)?;

    let mut rng = RngStream::new(seed);
    let mut budget = EvalBudget::new(params.max_evals);
    let mut recorder = RunRecorder::new(params.max_evals);
    let mut swarm = init_swarm(problem, params.pop_size, &mut rng, &mut budget)?;
    recorder.absorb_init(&swarm);

    let n = swarm.len();
    let dim = problem.dimension();
    let bounds = problem.bounds();
    let mut fitness_sum = swarm.fitness_sum();
    let mut best = swarm.best_index();

    'generations: loop {
        for target in 0..n {
            if budget.is_exhausted() {
                break 'generations;
            }
            let r1 = loop {
                let i = rng.index(n);
                if i != target {
                    break i;
                }
            };
            let r2 = loop {
                let i = rng.index(n);
                if i != target && i != r1 {
                    break i;
                }
            };
            let forced = rng.index(dim);
            let mut trial = swarm.whale(target).position.clone();
            for (d, gene) in trial.iter_mut().enumerate() {
                let cross = rng.unit() < params.crossover_prob;
                if d == forced || cross {
                    *gene = swarm.whale(best).position[d]
                        + params.scale_factor
                            * (swarm.whale(r1).position[d] - swarm.whale(r2).position[d]);
                }
            }
            bounds.clamp(&mut trial);
            let fitness = budget
                .evaluate(problem, &trial)
                .expect("budget was checked before the trial");
            recorder.on_eval(budget.used(), &trial, fitness);
            if fitness <= swarm.whale(target).fitness {
                fitness_sum += fitness - swarm.whale(target).fitness;
                swarm.replace(target, trial, fitness);
                if fitness < swarm.whale(best).fitness {
                    best = target;
                }
            }
            recorder.pop_sample(budget.used(), fitness_sum / n as f64);
        }
    }

    Ok(recorder.finish(swarm, seed, budget.used()))
}

/// Run global-best PSO until the budget is exhausted.
///
/// Velocities start at zero and are clamped to the full per-dimension range;
/// positions are clamped into the bounds. Per particle and dimension the draw
/// order is the cognitive draw then the social draw. Personal and global
/// bests update immediately after each evaluation.
pub fn run_pso_inertia<P: Problem + ?Sized>(
    problem: &P,
    params: &PsoParams,
    seed: u64,
) -> Result<RunResult, Error> {
    check_budget(params.pop_size, params.max_evals)?;

    let mut rng = RngStream::new(seed);
    let mut budget = EvalBudget::new(params.max_evals);
    let mut recorder = RunRecorder::new(params.max_evals);
    let mut swarm = init_swarm(problem, params.pop_size, &mut rng, &mut budget)?;
    recorder.absorb_init(&swarm);

    let n = swarm.len();
    let dim = problem.dimension();
    let bounds = problem.bounds();
    let mut fitness_sum = swarm.fitness_sum();

    let mut velocity = vec![vec![0.0; dim]; n];
    let mut personal: Vec<Whale> = swarm.whales().to_vec();
    let mut global = swarm.best().clone();

    'iterations: loop {
        for i in 0..n {
            if budget.is_exhausted() {
                break 'iterations;
            }
            let mut position = swarm.whale(i).position.clone();
            for d in 0..dim {
                let r1 = rng.unit();
                let r2 = rng.unit();
                let v = params.inertia * velocity[i][d]
                    + params.cognitive * r1 * (personal[i].position[d] - position[d])
                    + params.social * r2 * (global.position[d] - position[d]);
                let cap = bounds.width(d);
                velocity[i][d] = v.clamp(-cap, cap);
                position[d] += velocity[i][d];
            }
            bounds.clamp(&mut position);
            let fitness = budget
                .evaluate(problem, &position)
                .expect("budget was checked before the update");
            fitness_sum += fitness - swarm.whale(i).fitness;
            swarm.replace(i, position, fitness);
            recorder.on_eval(budget.used(), &swarm.whale(i).position, fitness);
            recorder.pop_sample(budget.used(), fitness_sum / n as f64);
            if fitness < personal[i].fitness {
                personal[i] = swarm.whale(i).clone();
                if fitness < global.fitness {
                    global = swarm.whale(i).clone();
                }
            }
        }
    }

    Ok(recorder.finish(swarm, seed, budget.used()))
}

/// Run the generational GA until the budget is exhausted.
///
/// Each generation copies the single best individual unchanged, then fills
/// the remaining slots with evaluated children: two parents by size-2
/// tournaments, an arithmetic blend with one mixing draw per child applied
/// with the crossover probability (otherwise the first parent is copied), and
/// per-gene uniform reset mutation. If the budget runs out mid-generation the
/// unfilled slots keep their previous individuals.
pub fn run_ga<P: Problem + ?Sized>(
    problem: &P,
    params: &GaParams,
    seed: u64,
) -> Result<RunResult, Error> {
    assert!(
        (0.0..=1.0).contains(&params.crossover_prob)
            && (0.0..=1.0).contains(&params.mutation_prob),
        "GA probabilities must lie in [0, 1]"
    );
    check_budget(params.pop_size, params.max_evals)?;

    let mut rng = RngStream::new(seed);
    let mut budget = EvalBudget::new(params.max_evals);
    let mut recorder = RunRecorder::new(params.max_evals);
    let mut swarm = init_swarm(problem, params.pop_size, &mut rng, &mut budget)?;
    recorder.absorb_init(&swarm);

    let n = swarm.len();
    let bounds = problem.bounds();

    while !budget.is_exhausted() {
        let before = budget.used();
        let elite = swarm.best().clone();
        let mut fitness_sum = swarm.fitness_sum() - swarm.whale(0).fitness + elite.fitness;
        let mut next = Vec::with_capacity(n);
        next.push(elite);
        while next.len() < n && !budget.is_exhausted() {
            let p1 = tournament(&swarm, &mut rng);
            let p2 = tournament(&swarm, &mut rng);
            let mut child = if rng.unit() < params.crossover_prob {
                let lambda = rng.unit();
                swarm
                    .whale(p1)
                    .position
                    .iter()
                    .zip(&swarm.whale(p2).position)
                    .map(|(a, b)| lambda * a + (1.0 - lambda) * b)
                    .collect::<Vec<f64>>()
            } else {
                swarm.whale(p1).position.clone()
            };
            for (d, gene) in child.iter_mut().enumerate() {
                if rng.unit() < params.mutation_prob {
                    *gene = rng.uniform(bounds.lower()[d], bounds.upper()[d]);
                }
            }
            bounds.clamp(&mut child);
            let fitness = budget
                .evaluate(problem, &child)
                .expect("budget was checked before breeding");
            recorder.on_eval(budget.used(), &child, fitness);
            fitness_sum += fitness - swarm.whale(next.len()).fitness;
            next.push(Whale {
                position: child,
                fitness,
            });
            recorder.pop_sample(budget.used(), fitness_sum / n as f64);
        }
        // Budget ran dry mid-generation: the rest survive unchanged.
        while next.len() < n {
            next.push(swarm.whale(next.len()).clone());
        }
        swarm = Swarm::from_whales(next);
        if budget.used() == before {
            // A lone elite breeds no children and would loop forever.
            break;
        }
    }

    Ok(recorder.finish(swarm, seed, budget.used()))
}

/// Size-2 tournament; the first contender wins ties.
fn tournament(swarm: &Swarm, rng: &mut RngStream) -> usize {
    let a = rng.index(swarm.len());
    let b = rng.index(swarm.len());
    if swarm.whale(b).fitness < swarm.whale(a).fitness {
        b
    } else {
        a
    }
}
