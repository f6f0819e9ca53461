//! Figure-style harnesses: the probability trace of the search and the
//! `(P_c, P_q)` sweep of the `D/T` statistic.

use rayon::prelude::*;

use crate::analytic::closed_form_probability;
use crate::error::{Error, Result};
use crate::game::{expected_dt, run_match, GameConfig, GameVariant, WomanProfile};
use crate::rng::cell_stream;
use crate::statevector::{max_iterations, uniform_superposition, OracleSpec};
use crate::strategies::ClassicStrategy;

/// Default number of grid points per axis, i.e. steps of 0.05 over [0, 1].
pub const DEFAULT_GRID_POINTS: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TracePoint {
    pub iteration: usize,
    pub p_target: f64,
    /// Probability of each single non-target state (they are all equal).
    pub p_other_each: f64,
    pub amp_target: f64,
}

/// Exact target / non-target probabilities after `0..=max_iterations`
/// iterates from the uniform start.
pub fn amplitude_trace(
    n_qubits: usize,
    target: usize,
    iterations: usize,
) -> Result<Vec<TracePoint>> {
    let oracle = OracleSpec::new(n_qubits, target)?;
    let mut state = uniform_superposition(n_qubits)?;
    let bound = max_iterations(state.dim());
    if iterations > bound {
        return Err(Error::Config(format!(
            "{iterations} Grover iterations exceed the bound {bound} for N={}",
            state.dim()
        )));
    }
    let other = if target == 0 { 1 } else { 0 };
    let mut points = Vec::with_capacity(iterations + 1);
    for iteration in 0..=iterations {
        if iteration > 0 {
            state.grover_iterate(&oracle)?;
        }
        let amps = state.amplitudes();
        points.push(TracePoint {
            iteration,
            p_target: amps[target].norm_sqr(),
            p_other_each: amps.get(other).map_or(0.0, |a| a.norm_sqr()),
            amp_target: amps[target].re,
        });
    }
    state.check_normalized()?;
    Ok(points)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub n_qubits: usize,
    pub variant: GameVariant,
    pub classic_strategy: ClassicStrategy,
    pub grid_points: usize,
    pub trials_per_cell: u64,
    pub seed: u64,
    pub target: usize,
    pub quantum_iterations: usize,
}

impl SweepSpec {
    pub fn new(variant: GameVariant, n_qubits: usize) -> Self {
        Self {
            n_qubits,
            variant,
            classic_strategy: ClassicStrategy::Memoryless,
            grid_points: DEFAULT_GRID_POINTS,
            trials_per_cell: crate::game::DEFAULT_TRIALS,
            seed: 0,
            target: 0,
            quantum_iterations: 1,
        }
    }

    /// Grid coordinates `i / (G - 1)` for `i in 0..G`.
    pub fn grid_values(&self) -> Vec<f64> {
        let last = (self.grid_points - 1) as f64;
        (0..self.grid_points).map(|i| i as f64 / last).collect()
    }

    pub fn game_config(&self) -> Result<GameConfig> {
        if self.grid_points < 2 {
            return Err(Error::Config(
                "grid needs at least 2 points per axis".into(),
            ));
        }
        let mut cfg = GameConfig::new(self.variant, self.n_qubits)?;
        cfg.classic_strategy = self.classic_strategy;
        cfg.trials = self.trials_per_cell;
        cfg.quantum_iterations = self.quantum_iterations;
        cfg.seed = self.seed;
        cfg.validate()?;
        OracleSpec::new(self.n_qubits, self.target)?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub p_c: f64,
    pub p_q: f64,
    pub d_over_t_measured: f64,
    pub d_over_t_expected: f64,
    pub trials: u64,
}

/// One Monte Carlo match per grid cell, `P_c` outer and `P_q` inner. Cells
/// run in parallel; each draws from its own `(seed, row, col)` stream.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let cfg = spec.game_config()?;
    let values = spec.grid_values();
    let g = values.len();
    (0..g * g)
        .into_par_iter()
        .map(|cell| {
            let (i, j) = (cell / g, cell % g);
            let woman = WomanProfile::new(spec.target, values[i], values[j])?;
            let stats = run_match(&cfg, &woman, &mut cell_stream(spec.seed, i, j))?;
            Ok(SweepRow {
                p_c: values[i],
                p_q: values[j],
                d_over_t_measured: stats.d_over_t(),
                d_over_t_expected: expected_dt(&cfg, &woman),
                trials: stats.trials,
            })
        })
        .collect()
}

/// Analytic-only sweep over the same grid, without sampling.
pub fn expected_surface(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let cfg = spec.game_config()?;
    let values = spec.grid_values();
    let mut rows = Vec::with_capacity(values.len() * values.len());
    for &p_c in &values {
        for &p_q in &values {
            let woman = WomanProfile::new(spec.target, p_c, p_q)?;
            let e = expected_dt(&cfg, &woman);
            rows.push(SweepRow {
                p_c,
                p_q,
                d_over_t_measured: e,
                d_over_t_expected: e,
                trials: 0,
            });
        }
    }
    Ok(rows)
}

/// Zero contour of the expected surface: for every grid `P_q > 0`, the `P_c`
/// of the first sign change along the `P_c` axis, linearly interpolated.
pub fn sign_boundary(rows: &[SweepRow]) -> Result<Vec<(f64, f64)>> {
    let g = (rows.len() as f64).sqrt().round() as usize;
    if g < 2 || g * g != rows.len() {
        return Err(Error::Shape(format!(
            "{} rows is not a square grid",
            rows.len()
        )));
    }
    for i in 0..g {
        for j in 0..g {
            let r = &rows[i * g + j];
            if r.p_c != rows[i * g].p_c || r.p_q != rows[j].p_q {
                return Err(Error::Shape(format!(
                    "row {} breaks the row-major grid layout",
                    i * g + j
                )));
            }
        }
    }

    let mut boundary = Vec::new();
    for j in 0..g {
        let p_q = rows[j].p_q;
        if p_q <= 0.0 {
            continue;
        }
        for i in 0..g - 1 {
            let (lo, hi) = (&rows[i * g + j], &rows[(i + 1) * g + j]);
            let (a, b) = (lo.d_over_t_expected, hi.d_over_t_expected);
            if a * b < 0.0 {
                let t = a / (a - b);
                boundary.push((p_q, lo.p_c + t * (hi.p_c - lo.p_c)));
                break;
            }
            if b == 0.0 && a != 0.0 {
                boundary.push((p_q, hi.p_c));
                break;
            }
        }
    }
    Ok(boundary)
}

/// Closed-form target probability for every iteration in a trace.
pub fn closed_form_trace(dim: usize, max_iterations: usize) -> Vec<f64> {
    (0..=max_iterations)
        .map(|k| closed_form_probability(dim, k))
        .collect()
}
