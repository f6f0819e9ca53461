//! Grover-search dating market.
//!
//! A state-vector simulator for single-target Grover search, the proposal
//! strategies of a quantum and a classic suitor, the two turn protocols that
//! pit them against each other, and sweep harnesses that tabulate the
//! relative success statistic `D/T` over the acceptance probabilities.
//!
//! ```
//! use qdate_core::{run_grover, OracleSpec};
//!
//! let oracle = OracleSpec::new(3, 5).unwrap();
//! let state = run_grover(3, &oracle, 1).unwrap();
//! assert!((state.probability(5).unwrap() - 0.78125).abs() < 1e-12);
//! ```

pub mod analytic;
pub mod dense;
pub mod error;
pub mod experiment;
pub mod game;
pub mod kv;
pub mod report;
pub mod rng;
pub mod statevector;
pub mod strategies;

pub use analytic::{closed_form_probability, optimal_iterations};
pub use error::{Error, Result};
pub use experiment::{amplitude_trace, run_sweep, sign_boundary, SweepRow, SweepSpec, TracePoint};
pub use game::{
    expected_dt, play_turn, run_match, GameConfig, GameStats, GameVariant, TurnOutcome,
    WomanProfile,
};
pub use kv::KvMap;
pub use statevector::{
    build_oracle, run_grover, uniform_superposition, FeatureTable, OracleSpec, QuantumState,
    MAX_QUBITS,
};
pub use strategies::{ClassicStrategy, StrategyKind};
