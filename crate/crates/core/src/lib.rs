//! A function-optimization library built around the whale swarm optimizer:
//! whales move toward their nearest strictly-better neighbor with a random
//! step whose scale decays exponentially with distance, which lets the
//! population both converge and hold multiple peaks at once.
//!
//! The crate bundles:
//!
//! - [`wsa`]: the whale swarm optimizer itself;
//! - [`baselines`]: a real-coded GA, DE/best/1/bin, and inertia-weight PSO
//!   for comparison, all sharing the same budget and RNG contracts;
//! - [`objective`]: twelve standard benchmark functions with bounds, known
//!   optima, and a deterministic random-shift protocol;
//! - [`metrics`]: success rate, optima counting, maximum peak ratio, and
//!   convergence aggregation over repeated runs;
//! - [`harness`]: presets, seeded batch execution, and CSV report emission.
//!
//! Every run is a pure function of (seed, parameters, objective): runs
//! replay bit-identically, and the only stopping criterion is the budget of
//! objective evaluations.

pub mod baselines;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod objective;
pub mod swarm;
pub mod wsa;

pub use baselines::{run_de_best_1_bin, run_ga, run_pso_inertia, DeParams, GaParams, PsoParams};
pub use error::Error;
pub use harness::{
    run_batch, run_experiment, ConfigOverlay, ExperimentConfig, FunctionPreset, HarnessError,
    ReportFiles, FUNCTION_PRESETS,
};
pub use metrics::{
    average_convergence, count_optima, is_global_optimum, mpr, success_rate, AlgorithmId,
    ExperimentReport, OptimaAssignment,
};
pub use objective::{known_optima, make_shifted, Bounds, FunctionId, Objective, ShiftRecord};
pub use swarm::{
    euclidean_distance, init_swarm, EvalBudget, Problem, RngStream, RunResult, Swarm, TracePoint,
    UniformSource, Whale,
};
pub use wsa::{better_nearest, default_eta, intensity, move_whale, run_wsa, WsaParams};
