//! Shared fixtures for the criterion benchmarks.

use qdate_core::{GameConfig, GameVariant, OracleSpec, WomanProfile};

/// Oracle marking the last index of an `n`-qubit register.
pub fn last_index_oracle(n_qubits: usize) -> OracleSpec {
    OracleSpec::new(n_qubits, (1 << n_qubits) - 1).expect("valid register")
}

/// Game configuration at N = 8 with `trials` turns.
pub fn small_game(variant: GameVariant, trials: u64) -> (GameConfig, WomanProfile) {
    let mut cfg = GameConfig::new(variant, 3).expect("valid config");
    cfg.trials = trials;
    (cfg, WomanProfile::new(2, 0.6, 0.4).expect("valid profile"))
}
