//! The twelve benchmark functions: box bounds, known global optima, shift
//! wrappers for the high-dimensional functions, and domain geometry helpers.
//!
//! All functions are minimization problems. F1-F6 are low-dimensional
//! multimodal functions with tabulated optima; F7-F12 are 100-dimensional
//! functions that are usually run through [`make_shifted`] so their optima do
//! not sit at trivial locations.

use crate::error::Error;
use crate::swarm::{Problem, RngStream};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Identifier of one of the twelve benchmark functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
}

impl FunctionId {
    pub const ALL: [FunctionId; 12] = [
        FunctionId::F1,
        FunctionId::F2,
        FunctionId::F3,
        FunctionId::F4,
        FunctionId::F5,
        FunctionId::F6,
        FunctionId::F7,
        FunctionId::F8,
        FunctionId::F9,
        FunctionId::F10,
        FunctionId::F11,
        FunctionId::F12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::F1 => "F1",
            FunctionId::F2 => "F2",
            FunctionId::F3 => "F3",
            FunctionId::F4 => "F4",
            FunctionId::F5 => "F5",
            FunctionId::F6 => "F6",
            FunctionId::F7 => "F7",
            FunctionId::F8 => "F8",
            FunctionId::F9 => "F9",
            FunctionId::F10 => "F10",
            FunctionId::F11 => "F11",
            FunctionId::F12 => "F12",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FunctionId::F1 => "Uneven Increasing Minima",
            FunctionId::F2 => "Uneven Minima",
            FunctionId::F3 => "Himmelblau",
            FunctionId::F4 => "Six-hump camel back",
            FunctionId::F5 => "Inverted Shubert",
            FunctionId::F6 => "Branin RCOS",
            FunctionId::F7 => "Rastrigin",
            FunctionId::F8 => "Schwefel",
            FunctionId::F9 => "Griewank",
            FunctionId::F10 => "Rosenbrock",
            FunctionId::F11 => "Sphere",
            FunctionId::F12 => "Zakharov",
        }
    }

    /// Standard dimensionality: 1 or 2 for F1-F6, 100 for F7-F12.
    pub fn default_dimension(self) -> usize {
        match self {
            FunctionId::F1 | FunctionId::F2 => 1,
            FunctionId::F3
            | FunctionId::F4
            | FunctionId::F5
            | FunctionId::F6 => 2,
            _ => 100,
        }
    }

    /// Whether the function supports the random-shift protocol (F7-F12).
    pub fn is_shiftable(self) -> bool {
        !matches!(
            self,
            FunctionId::F1
                | FunctionId::F2
                | FunctionId::F3
                | FunctionId::F4
                | FunctionId::F5
                | FunctionId::F6
        )
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FunctionId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown function id `{s}` (expected F1..F12)"))
    }
}

/// Per-dimension closed box constraints.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    /// Panics unless the two vectors have equal nonzero length and
    /// `lower[i] < upper[i]` for every dimension.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Bounds {
        assert_eq!(lower.len(), upper.len(), "bound vectors differ in length");
        assert!(!lower.is_empty(), "bounds must have at least one dimension");
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            assert!(lo < hi, "lower bound {lo} not below upper bound {hi} in dimension {i}");
        }
        Bounds { lower, upper }
    }

    /// The same interval in every dimension.
    pub fn uniform(dimension: usize, lower: f64, upper: f64) -> Bounds {
        Bounds::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, dim: usize) -> f64 {
        self.upper[dim] - self.lower[dim]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| v >= lo && v <= hi)
    }

    /// Clamp every coordinate into its interval, in place.
    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// Diagonal of the box: `sqrt(sum_i (upper_i - lower_i)^2)`, the largest
    /// possible distance between two points inside the bounds.
    pub fn d_max(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt()
    }
}

/// A bounded minimization problem with its published facts attached: target
/// minimum value, number of global optima, accuracy level, and (for F7-F12)
/// an optional random shift `o` so that the evaluated point is `x - o`.
#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    id: FunctionId,
    dimension: usize,
    bounds: Bounds,
    target_value: f64,
    num_global_optima: usize,
    known_optima: Option<Vec<Vec<f64>>>,
    accuracy: f64,
    shift: Option<Vec<f64>>,
}

impl Objective {
    /// The function in its published form: standard dimension, no shift,
    /// default accuracy level.
    pub fn standard(id: FunctionId) -> Objective {
        Objective::with_dimension(id, id.default_dimension())
    }

    /// An unshifted objective with an explicit dimension (F7-F12 accept any
    /// dimension >= 1; F1-F6 only their standard one).
    pub fn with_dimension(id: FunctionId, dimension: usize) -> Objective {
        if !id.is_shiftable() {
            assert_eq!(
                dimension,
                id.default_dimension(),
                "{id} is only defined in {} dimension(s)",
                id.default_dimension()
            );
        }
        assert!(dimension >= 1, "dimension must be positive");
        Objective {
            id,
            dimension,
            bounds: bounds_for(id, dimension),
            target_value: target_value_of(id),
            num_global_optima: optimum_count_of(id),
            known_optima: known_optima(id).ok(),
            accuracy: default_accuracy(id),
            shift: None,
        }
    }

    /// Attach an explicit shift vector (replay path for persisted
    /// [`ShiftRecord`]s). Only F7-F12 support shifting.
    pub fn shifted_with(id: FunctionId, shift: Vec<f64>) -> Result<Objective, Error> {
        if !id.is_shiftable() {
            return Err(Error::Unsupported {
                op: "shifting",
                id,
            });
        }
        let mut obj = Objective::with_dimension(id, shift.len());
        obj.shift = Some(shift);
        Ok(obj)
    }

    /// Override the accuracy level used to qualify solutions as optima.
    pub fn with_accuracy(mut self, eps: f64) -> Objective {
        assert!(eps > 0.0, "accuracy level must be positive");
        self.accuracy = eps;
        self
    }

    pub fn id(&self) -> FunctionId {
        self.id
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// The known global minimum value.
    pub fn target_value(&self) -> f64 {
        self.target_value
    }

    pub fn num_global_optima(&self) -> usize {
        self.num_global_optima
    }

    /// Fitness error under which a solution counts as a located optimum.
    pub fn accuracy(&self) -> f64 {
        self.accuracy
    }

    pub fn shift(&self) -> Option<&[f64]> {
        self.shift.as_deref()
    }

    pub fn known_optima(&self) -> Option<&[Vec<f64>]> {
        self.known_optima.as_deref()
    }

    /// Evaluate the objective. Pure and deterministic; callers are expected
    /// to clamp `x` into bounds first.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64, Error> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        Ok(self.raw_value(x))
    }

    /// Locations of all global optima: the tabulated points for F1-F6, the
    /// analytic optimum (translated by the shift, if any) for F7-F12.
    pub fn optima_locations(&self) -> Vec<Vec<f64>> {
        match &self.known_optima {
            Some(points) => points.clone(),
            None => {
                let mut opt = base_optimum(self.id, self.dimension);
                if let Some(o) = &self.shift {
                    for (v, s) in opt.iter_mut().zip(o) {
                        *v += s;
                    }
                }
                vec![opt]
            }
        }
    }

    fn raw_value(&self, x: &[f64]) -> f64 {
        match &self.shift {
            None => value_of(self.id, x.iter().copied()),
            Some(o) => value_of(self.id, x.iter().zip(o).map(|(x, o)| x - o)),
        }
    }
}

impl Problem for Objective {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn value(&self, x: &[f64]) -> f64 {
        assert_eq!(
            x.len(),
            self.dimension,
            "position has wrong dimension for {}",
            self.id
        );
        self.raw_value(x)
    }
}

/// Build a shifted objective for F7-F12. The shift vector is drawn
/// deterministically from `shift_seed`, one uniform draw per dimension in
/// ascending order, inside the envelope `[0.25 * (lower_i - opt_i),
/// 0.25 * (upper_i - opt_i)]`, which keeps the shifted optimum strictly
/// interior to the bounds.
pub fn make_shifted(
    id: FunctionId,
    dimension: usize,
    shift_seed: u64,
) -> Result<Objective, Error> {
    if !id.is_shiftable() {
        return Err(Error::Unsupported {
            op: "make_shifted",
            id,
        });
    }
    let bounds = bounds_for(id, dimension);
    let opt = base_optimum(id, dimension);
    let mut rng = RngStream::new(shift_seed);
    let shift = (0..dimension)
        .map(|i| {
            let lo = 0.25 * (bounds.lower()[i] - opt[i]);
            let hi = 0.25 * (bounds.upper()[i] - opt[i]);
            rng.uniform(lo, hi)
        })
        .collect();
    let mut obj = Objective::with_dimension(id, dimension);
    obj.shift = Some(shift);
    Ok(obj)
}

/// Tabulated global optimum locations for F1-F6. F7-F12 are rejected; their
/// single optimum is analytic and lives on the (possibly shifted) objective,
/// see [`Objective::optima_locations`].
pub fn known_optima(id: FunctionId) -> Result<Vec<Vec<f64>>, Error> {
    match id {
        FunctionId::F1 => Ok(vec![vec![F1_OPTIMUM]]),
        FunctionId::F2 => Ok(F2_OPTIMA.iter().map(|&x| vec![x]).collect()),
        FunctionId::F3 => Ok(F3_OPTIMA.iter().map(|p| p.to_vec()).collect()),
        FunctionId::F4 => Ok(F4_OPTIMA.iter().map(|p| p.to_vec()).collect()),
        FunctionId::F5 => {
            // The 2-D product is minimal where one coordinate minimizes the
            // 1-D Shubert sum and the other maximizes it: 2 * 3 * 3 points.
            let mut points = Vec::with_capacity(18);
            for &a in &SHUBERT_MINIMIZERS {
                for &b in &SHUBERT_MAXIMIZERS {
                    points.push(vec![a, b]);
                    points.push(vec![b, a]);
                }
            }
            Ok(points)
        }
        FunctionId::F6 => Ok(F6_OPTIMA.iter().map(|p| p.to_vec()).collect()),
        _ => Err(Error::Unsupported {
            op: "known_optima",
            id,
        }),
    }
}

/// One persisted shift: enough to replay the exact landscape of a shifted run.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftRecord {
    pub id: FunctionId,
    pub seed: u64,
    pub shift: Vec<f64>,
}

impl ShiftRecord {
    /// `<function_id> <seed> <d> <o_1> ... <o_d>`, floats printed with 17
    /// significant digits so the round trip is exact for 64-bit values.
    pub fn to_line(&self) -> String {
        let mut line = format!("{} {} {}", self.id, self.seed, self.shift.len());
        for v in &self.shift {
            line.push(' ');
            line.push_str(&format!("{v:.16e}"));
        }
        line
    }

    pub fn parse_line(line: &str) -> Result<ShiftRecord, String> {
        let mut parts = line.split_whitespace();
        let id: FunctionId = parts
            .next()
            .ok_or_else(|| "empty shift record".to_string())?
            .parse()?;
        let seed: u64 = parts
            .next()
            .ok_or_else(|| "shift record is missing the seed".to_string())?
            .parse()
            .map_err(|e| format!("bad seed: {e}"))?;
        let dim: usize = parts
            .next()
            .ok_or_else(|| "shift record is missing the dimension".to_string())?
            .parse()
            .map_err(|e| format!("bad dimension: {e}"))?;
        let shift: Vec<f64> = parts
            .map(|tok| tok.parse().map_err(|e| format!("bad shift value `{tok}`: {e}")))
            .collect::<Result<_, _>>()?;
        if shift.len() != dim {
            return Err(format!(
                "shift record declares {dim} values but carries {}",
                shift.len()
            ));
        }
        Ok(ShiftRecord { id, seed, shift })
    }
}

// ---------------------------------------------------------------------------
// Published facts.

const F1_OPTIMUM: f64 = 0.07969977990186145;

// (0.15 + 0.2 k)^(4/3) for k = 0..4: the points where sin^6 reaches 1.
const F2_OPTIMA: [f64; 5] = [
    0.07969939268869583,
    0.2466554556222712,
    0.4506266988303553,
    0.6814202223120526,
    0.9338951938669807,
];

const F3_OPTIMA: [[f64; 2]; 4] = [
    [3.0, 2.0],
    [-2.805118086952745, 3.131312518250573],
    [-3.779310253377747, -3.2831859912861696],
    [3.5844283403304917, -1.8481265269644036],
];

const F4_OPTIMA: [[f64; 2]; 2] = [
    [0.08984201310031807, -0.7126564030207396],
    [-0.08984201310031807, 0.7126564030207396],
];

// The 1-D Shubert sum is 2*pi-periodic; three translates of its global
// minimizer and maximizer fall inside [-10, 10].
const SHUBERT_MINIMIZERS: [f64; 3] = [
    -7.708313735499347,
    -1.425128428319761,
    4.858056878859825,
];
const SHUBERT_MAXIMIZERS: [f64; 3] = [
    -7.0835064076515595,
    -0.8003211004719731,
    5.482864206707613,
];

const F6_OPTIMA: [[f64; 2]; 3] = [
    [-PI, 12.275],
    [PI, 2.275],
    [3.0 * PI, 2.475],
];

// Argmax of x * sin(sqrt(|x|)) on [0, 500]; the Schwefel optimum coordinate.
const SCHWEFEL_OPTIMUM: f64 = 420.968746359982;

fn bounds_for(id: FunctionId, dimension: usize) -> Bounds {
    match id {
        FunctionId::F1 | FunctionId::F2 => Bounds::uniform(dimension, 0.0, 1.0),
        FunctionId::F3 => Bounds::uniform(dimension, -6.0, 6.0),
        FunctionId::F4 => Bounds::new(vec![-1.9, -1.1], vec![1.9, 1.1]),
        FunctionId::F5 => Bounds::uniform(dimension, -10.0, 10.0),
        FunctionId::F6 => Bounds::new(vec![-5.0, 0.0], vec![10.0, 15.0]),
        FunctionId::F7 | FunctionId::F9 | FunctionId::F11 => {
            Bounds::uniform(dimension, -100.0, 100.0)
        }
        FunctionId::F8 => Bounds::uniform(dimension, -500.0, 500.0),
        FunctionId::F10 => Bounds::uniform(dimension, -15.0, 15.0),
        FunctionId::F12 => Bounds::uniform(dimension, -5.0, 10.0),
    }
}

fn target_value_of(id: FunctionId) -> f64 {
    match id {
        FunctionId::F1 | FunctionId::F2 => -1.0,
        FunctionId::F3 => -200.0,
        FunctionId::F4 => -4.12651381395951,
        FunctionId::F5 => -186.73090883102384,
        FunctionId::F6 => 0.39788735772973816,
        _ => 0.0,
    }
}

fn optimum_count_of(id: FunctionId) -> usize {
    match id {
        FunctionId::F1 => 1,
        FunctionId::F2 => 5,
        FunctionId::F3 => 4,
        FunctionId::F4 => 2,
        FunctionId::F5 => 18,
        FunctionId::F6 => 3,
        _ => 1,
    }
}

/// Default accuracy level (fitness error) per function.
pub fn default_accuracy(id: FunctionId) -> f64 {
    match id {
        FunctionId::F1 => 0.01,
        FunctionId::F2 => 1e-6,
        FunctionId::F3 | FunctionId::F5 => 0.05,
        FunctionId::F4 => 0.001,
        FunctionId::F6 => 0.002,
        _ => 0.001,
    }
}

fn base_optimum(id: FunctionId, dimension: usize) -> Vec<f64> {
    let coord = match id {
        FunctionId::F8 => SCHWEFEL_OPTIMUM,
        FunctionId::F10 => 1.0,
        _ => 0.0,
    };
    vec![coord; dimension]
}

// ---------------------------------------------------------------------------
// Function bodies. `z` is the already-shifted point.

fn value_of<I>(id: FunctionId, z: I) -> f64
where
    I: ExactSizeIterator<Item = f64>,
{
    let mut z = z;
    match id {
        FunctionId::F1 => {
            let x = z.next().expect("F1 is one-dimensional");
            let envelope = (-2.0 * 2.0_f64.ln() * ((x - 0.08) / 0.854).powi(2)).exp();
            -envelope * uneven_peaks(x)
        }
        FunctionId::F2 => -uneven_peaks(z.next().expect("F2 is one-dimensional")),
        FunctionId::F3 => {
            let (x1, x2) = two(&mut z);
            (x1 * x1 + x2 - 11.0).powi(2) + (x1 + x2 * x2 - 7.0).powi(2) - 200.0
        }
        FunctionId::F4 => {
            let (x1, x2) = two(&mut z);
            4.0 * ((4.0 - 2.1 * x1 * x1 + x1.powi(4) / 3.0) * x1 * x1
                + x1 * x2
                + (-4.0 + 4.0 * x2 * x2) * x2 * x2)
        }
        FunctionId::F5 => {
            let (x1, x2) = two(&mut z);
            shubert_sum(x1) * shubert_sum(x2)
        }
        FunctionId::F6 => {
            let (x1, x2) = two(&mut z);
            (x2 - 5.1 / (4.0 * PI * PI) * x1 * x1 + 5.0 / PI * x1 - 6.0).powi(2)
                + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos()
                + 10.0
        }
        FunctionId::F7 => z
            .map(|x| x * x - 10.0 * (2.0 * PI * x).cos() + 10.0)
            .sum(),
        FunctionId::F8 => {
            let d = z.len() as f64;
            d * 418.9829 - z.map(|x| x * x.abs().sqrt().sin()).sum::<f64>()
        }
        FunctionId::F9 => {
            let mut sum = 0.0;
            let mut prod = 1.0;
            for (i, x) in z.enumerate() {
                sum += x * x;
                prod *= (x / ((i + 1) as f64).sqrt()).cos();
            }
            sum / 4000.0 - prod + 1.0
        }
        FunctionId::F10 => {
            let mut prev = z.next().expect("F10 needs at least one dimension");
            let mut total = 0.0;
            for x in z {
                total += 100.0 * (x - prev * prev).powi(2) + (prev - 1.0).powi(2);
                prev = x;
            }
            total
        }
        FunctionId::F11 => z.map(|x| x * x).sum(),
        FunctionId::F12 => {
            let mut squares = 0.0;
            let mut weighted = 0.0;
            for (i, x) in z.enumerate() {
                squares += x * x;
                weighted += 0.5 * (i + 1) as f64 * x;
            }
            squares + weighted.powi(2) + weighted.powi(4)
        }
    }
}

fn two<I: Iterator<Item = f64>>(z: &mut I) -> (f64, f64) {
    let x1 = z.next().expect("two-dimensional function");
    let x2 = z.next().expect("two-dimensional function");
    (x1, x2)
}

/// sin^6(5 pi (x^(3/4) - 0.05)): the uneven comb shared by F1 and F2.
fn uneven_peaks(x: f64) -> f64 {
    (5.0 * PI * (x.powf(0.75) - 0.05)).sin().powi(6)
}

/// sum_{j=1..5} j cos((j+1) x + j), the 1-D Shubert factor.
fn shubert_sum(x: f64) -> f64 {
    (1..=5)
        .map(|j| {
            let j = j as f64;
            j * ((j + 1.0) * x + j).cos()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn feval(id: FunctionId, x: &[f64]) -> f64 {
        Objective::standard(id).evaluate(x).unwrap()
    }

    #[test]
    fn sphere_is_zero_at_origin() {
        assert_eq!(feval(FunctionId::F11, &[0.0; 100]), 0.0);
    }

    #[test]
    fn himmelblau_first_optimum_is_exact() {
        assert_eq!(feval(FunctionId::F3, &[3.0, 2.0]), -200.0);
    }

    #[test]
    fn uneven_minima_second_optimum() {
        let x = 0.35_f64.powf(4.0 / 3.0);
        let f = feval(FunctionId::F2, &[x]);
        assert!((f + 1.0).abs() <= 1e-9, "F2 at second optimum: {f}");
    }

    #[test]
    fn camel_back_optimum_value() {
        let f = feval(FunctionId::F4, &[0.08984201, -0.7126564]);
        assert!((f + 4.126514).abs() <= 1e-4, "F4 at optimum: {f}");
    }

    #[test]
    fn evaluate_rejects_wrong_dimension() {
        let obj = Objective::standard(FunctionId::F3);
        assert_eq!(
            obj.evaluate(&[1.0]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn d_max_examples() {
        assert_eq!(Bounds::uniform(1, 0.0, 1.0).d_max(), 1.0);
        let d = Bounds::uniform(2, -6.0, 6.0).d_max();
        assert!((d - 12.0 * 2.0_f64.sqrt()).abs() <= 1e-12);
        assert_eq!(Bounds::uniform(100, -100.0, 100.0).d_max(), 2000.0);
    }

    #[test]
    fn d_max_is_translation_invariant_and_scales_linearly() {
        let mut rng = RngStream::new(11);
        for _ in 0..200 {
            let dim = rng.index(6) + 1;
            let mut lower = Vec::new();
            let mut upper = Vec::new();
            for _ in 0..dim {
                let lo = rng.uniform(-50.0, 50.0);
                lower.push(lo);
                upper.push(lo + rng.uniform(0.1, 40.0));
            }
            let base = Bounds::new(lower.clone(), upper.clone()).d_max();
            let t = rng.uniform(-5.0, 5.0);
            let translated = Bounds::new(
                lower.iter().map(|v| v + t).collect(),
                upper.iter().map(|v| v + t).collect(),
            )
            .d_max();
            assert!((translated - base).abs() <= 1e-9 * base.max(1.0));
            let k = rng.uniform(0.5, 10.0);
            let scaled = Bounds::new(
                lower.iter().map(|v| v * k).collect(),
                upper.iter().map(|v| v * k).collect(),
            )
            .d_max();
            assert!((scaled - k * base).abs() <= 1e-9 * scaled.max(1.0));
        }
    }

    #[test]
    fn known_optima_counts_match_the_published_table() {
        let counts = [1, 5, 4, 2, 18, 3];
        for (id, &n) in FunctionId::ALL[..6].iter().zip(&counts) {
            let pts = known_optima(*id).unwrap();
            assert_eq!(pts.len(), n, "{id}");
            assert_eq!(Objective::standard(*id).num_global_optima(), n);
        }
    }

    #[test]
    fn known_optima_evaluate_at_the_target_value() {
        for id in &FunctionId::ALL[..6] {
            let obj = Objective::standard(*id);
            for p in known_optima(*id).unwrap() {
                let f = obj.evaluate(&p).unwrap();
                assert!(
                    (f - obj.target_value()).abs() <= 1e-6,
                    "{id} at {p:?}: {f} vs {}",
                    obj.target_value()
                );
                assert!(
                    (f - obj.target_value()).abs() < obj.accuracy(),
                    "{id} optimum does not qualify at its own accuracy level"
                );
                assert!(obj.bounds().contains(&p), "{id} optimum out of bounds");
            }
        }
    }

    #[test]
    fn f1_minimum_is_slightly_shallower_than_minus_one() {
        let obj = Objective::standard(FunctionId::F1);
        let f = obj.evaluate(&[F1_OPTIMUM]).unwrap();
        let residual = f + 1.0;
        assert!(residual > 1e-7 && residual < 1e-6, "F1 residual: {residual}");
    }

    #[test]
    fn known_optima_rejects_high_dimensional_functions() {
        assert_eq!(
            known_optima(FunctionId::F7),
            Err(Error::Unsupported {
                op: "known_optima",
                id: FunctionId::F7
            })
        );
    }

    #[test]
    fn make_shifted_rejects_low_dimensional_functions() {
        assert!(make_shifted(FunctionId::F3, 2, 1).is_err());
    }

    #[test]
    fn make_shifted_is_deterministic_in_the_seed() {
        let a = make_shifted(FunctionId::F9, 100, 7).unwrap();
        let b = make_shifted(FunctionId::F9, 100, 7).unwrap();
        assert_eq!(a.shift(), b.shift());
        let c = make_shifted(FunctionId::F9, 100, 8).unwrap();
        assert_ne!(a.shift(), c.shift());
    }

    #[test]
    fn shift_envelope_keeps_the_optimum_strictly_interior() {
        for id in FunctionId::ALL[6..].iter() {
            for seed in 0..5 {
                let obj = make_shifted(*id, 100, seed).unwrap();
                let o = obj.shift().unwrap();
                let opt = obj.optima_locations().pop().unwrap();
                let bounds = obj.bounds();
                for i in 0..100 {
                    let base = opt[i] - o[i];
                    let lo = 0.25 * (bounds.lower()[i] - base);
                    let hi = 0.25 * (bounds.upper()[i] - base);
                    assert!(o[i] >= lo && o[i] <= hi, "{id} shift outside envelope");
                    assert!(
                        opt[i] > bounds.lower()[i] && opt[i] < bounds.upper()[i],
                        "{id} shifted optimum touches the bounds"
                    );
                }
            }
        }
    }

    #[test]
    fn zero_shift_reduces_to_the_base_function() {
        let obj = Objective::shifted_with(FunctionId::F11, vec![0.0; 100]).unwrap();
        assert_eq!(obj.evaluate(&[0.0; 100]).unwrap(), 0.0);
    }

    #[test]
    fn griewank_minimum_translates_with_the_shift() {
        let obj = make_shifted(FunctionId::F9, 100, 3).unwrap();
        let o: Vec<f64> = obj.shift().unwrap().to_vec();
        assert_eq!(obj.evaluate(&o).unwrap(), 0.0);
    }

    #[test]
    fn shifted_evaluation_equals_base_on_lattice_points() {
        // On a coarse lattice both x + o and (x + o) - o are exact, so the
        // shifted evaluation must be bit-identical to the base one.
        let mut rng = RngStream::new(99);
        for id in FunctionId::ALL[6..].iter() {
            let dim = 20;
            let base = Objective::with_dimension(*id, dim);
            let grain = 1.0 / 1024.0;
            let snap = |v: f64| (v / grain).round() * grain;
            let shift: Vec<f64> = (0..dim).map(|_| snap(rng.uniform(-1.0, 1.0))).collect();
            let shifted = Objective::shifted_with(*id, shift.clone()).unwrap();
            for _ in 0..50 {
                let x: Vec<f64> = (0..dim).map(|_| snap(rng.uniform(-10.0, 10.0))).collect();
                let moved: Vec<f64> = x.iter().zip(&shift).map(|(a, b)| a + b).collect();
                assert_eq!(
                    shifted.evaluate(&moved).unwrap(),
                    base.evaluate(&x).unwrap(),
                    "{id} shift invariance"
                );
            }
        }
    }

    #[test]
    fn schwefel_residual_at_the_analytic_optimum_stays_above_accuracy() {
        // The tabulated minimum of F8 is 0, but the 418.9829 offset leaves a
        // small positive residual at the true optimum, larger than the 1e-3
        // accuracy level. No algorithm can reach success on F8.
        let obj = Objective::standard(FunctionId::F8);
        let f = obj.evaluate(&vec![SCHWEFEL_OPTIMUM; 100]).unwrap();
        assert!(f > obj.accuracy() && f < 2e-3, "F8 residual: {f}");
    }

    #[test]
    fn shifted_optima_evaluate_near_zero_for_the_other_functions() {
        for id in [FunctionId::F7, FunctionId::F9, FunctionId::F10, FunctionId::F11, FunctionId::F12] {
            let obj = make_shifted(id, 100, 5).unwrap();
            let opt = obj.optima_locations().pop().unwrap();
            let f = obj.evaluate(&opt).unwrap();
            assert!(
                (f - obj.target_value()).abs() < obj.accuracy(),
                "{id} shifted optimum value: {f}"
            );
        }
    }

    #[test]
    fn evaluation_is_pure() {
        let obj = make_shifted(FunctionId::F12, 100, 13).unwrap();
        let mut rng = RngStream::new(5);
        for _ in 0..100 {
            let x: Vec<f64> = (0..100).map(|_| rng.uniform(-5.0, 10.0)).collect();
            let a = obj.evaluate(&x).unwrap();
            let b = obj.evaluate(&x).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn shift_record_round_trips_exactly() {
        let mut rng = RngStream::new(17);
        for seed in 0..20 {
            let rec = ShiftRecord {
                id: FunctionId::F10,
                seed,
                shift: (0..30).map(|_| rng.uniform(-25.0, 25.0)).collect(),
            };
            let parsed = ShiftRecord::parse_line(&rec.to_line()).unwrap();
            assert_eq!(parsed, rec);
        }
        assert!(ShiftRecord::parse_line("F13 0 1 0.0").is_err());
        assert!(ShiftRecord::parse_line("F9 0 2 0.0").is_err());
    }

    #[test]
    #[should_panic(expected = "lower bound")]
    fn bounds_reject_inverted_intervals() {
        Bounds::new(vec![1.0], vec![0.0]);
    }

    #[test]
    fn function_ids_parse_case_insensitively() {
        assert_eq!("f5".parse::<FunctionId>().unwrap(), FunctionId::F5);
        assert_eq!("F12".parse::<FunctionId>().unwrap(), FunctionId::F12);
        assert!("F13".parse::<FunctionId>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn shift_record_lines_round_trip_any_finite_shift(
                seed in any::<u64>(),
                shift in proptest::collection::vec(-1e6..1e6f64, 1..64),
            ) {
                let record = ShiftRecord { id: FunctionId::F8, seed, shift };
                let parsed = ShiftRecord::parse_line(&record.to_line()).unwrap();
                prop_assert_eq!(parsed, record);
            }

            #[test]
            fn d_max_dominates_distances_between_contained_points(
                spans in proptest::collection::vec((-1e3..1e3f64, 1e-6..1e3f64), 1..8),
                fractions in proptest::collection::vec((0.0..=1.0f64, 0.0..=1.0f64), 8),
            ) {
                let lower: Vec<f64> = spans.iter().map(|(lo, _)| *lo).collect();
                let upper: Vec<f64> = spans.iter().map(|(lo, w)| lo + w).collect();
                let bounds = Bounds::new(lower.clone(), upper.clone());
                let a: Vec<f64> = spans
                    .iter()
                    .zip(&fractions)
                    .map(|((lo, w), (f, _))| lo + f * w)
                    .collect();
                let b: Vec<f64> = spans
                    .iter()
                    .zip(&fractions)
                    .map(|((lo, w), (_, f))| lo + f * w)
                    .collect();
                let d = crate::swarm::euclidean_distance(&a, &b);
                prop_assert!(d <= bounds.d_max() * (1.0 + 1e-12));
            }
        }
    }
}
