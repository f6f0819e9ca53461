//! Proposal strategies for the two players.
//!
//! The quantum player runs the search and measures; the classic player
//! either draws uniformly with replacement (memoryless) or sweeps without
//! replacement within a turn.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::statevector::{run_grover, OracleSpec, QuantumState};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyKind {
    QuantumGrover { iterations: usize },
    ClassicMemoryless,
    ClassicSweep,
}

/// The classic player's strategy, as selected on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ClassicStrategy {
    #[default]
    Memoryless,
    Sweep,
}

impl ClassicStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Memoryless => "memoryless",
            Self::Sweep => "sweep",
        }
    }
}

impl From<ClassicStrategy> for StrategyKind {
    fn from(s: ClassicStrategy) -> Self {
        match s {
            ClassicStrategy::Memoryless => StrategyKind::ClassicMemoryless,
            ClassicStrategy::Sweep => StrategyKind::ClassicSweep,
        }
    }
}

impl fmt::Display for ClassicStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassicStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "memoryless" => Ok(Self::Memoryless),
            "sweep" => Ok(Self::Sweep),
            other => Err(Error::Config(format!("unknown classic strategy {other:?}"))),
        }
    }
}

/// Prepares a fresh uniform state, runs `iterations` iterates and measures.
pub fn quantum_propose<R: Rng + ?Sized>(
    n_qubits: usize,
    oracle: &OracleSpec,
    iterations: usize,
    rng: &mut R,
) -> Result<usize> {
    run_grover(n_qubits, oracle, iterations)?.measure(rng)
}

/// A quantum player whose prepared state is reused across attempts.
///
/// `run_grover` is deterministic, so measuring a cached copy is the same
/// distribution as [`quantum_propose`] without redoing the `O(kN)` work.
#[derive(Clone, Debug)]
pub struct QuantumPlayer {
    prepared: QuantumState,
}

impl QuantumPlayer {
    pub fn new(oracle: &OracleSpec, iterations: usize) -> Result<Self> {
        Ok(Self {
            prepared: run_grover(oracle.n_qubits(), oracle, iterations)?,
        })
    }

    pub fn propose<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<usize> {
        self.prepared.measure(rng)
    }

    pub fn state(&self) -> &QuantumState {
        &self.prepared
    }
}

/// Uniform index in `[0, dim)`.
pub fn classic_memoryless_propose<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> usize {
    assert!(dim >= 1, "empty option set");
    rng.gen_range(0..dim)
}

/// Indices already proposed during the current turn.
#[derive(Clone, Debug)]
pub struct SweepState {
    visited: Vec<bool>,
    remaining: Vec<usize>,
}

impl SweepState {
    pub fn new(dim: usize) -> Self {
        Self {
            visited: vec![false; dim],
            remaining: (0..dim).collect(),
        }
    }

    /// Forget all proposals; called at the start of every turn.
    pub fn reset(&mut self) {
        let dim = self.visited.len();
        self.visited.fill(false);
        self.remaining.clear();
        self.remaining.extend(0..dim);
    }

    pub fn dim(&self) -> usize {
        self.visited.len()
    }

    pub fn is_visited(&self, index: usize) -> bool {
        self.visited.get(index).copied().unwrap_or(false)
    }

    pub fn visited_count(&self) -> usize {
        self.dim() - self.remaining.len()
    }
}

/// Uniform index among the unvisited ones, which is then marked visited.
pub fn classic_sweep_propose<R: Rng + ?Sized>(
    sweep: &mut SweepState,
    rng: &mut R,
) -> Result<usize> {
    if sweep.remaining.is_empty() {
        return Err(Error::Exhausted(sweep.dim()));
    }
    let slot = rng.gen_range(0..sweep.remaining.len());
    let index = sweep.remaining.swap_remove(slot);
    sweep.visited[index] = true;
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::match_stream;

    #[test]
    fn quantum_four_states_always_hits() {
        let mut rng = match_stream(1, 0);
        for t in 0..4 {
            let oracle = OracleSpec::new(2, t).unwrap();
            for _ in 0..200 {
                assert_eq!(quantum_propose(2, &oracle, 1, &mut rng).unwrap(), t);
            }
        }
    }

    #[test]
    fn quantum_eight_states_one_iterate() {
        let mut rng = match_stream(2, 0);
        let oracle = OracleSpec::new(3, 4).unwrap();
        let hits = (0..100_000)
            .filter(|_| quantum_propose(3, &oracle, 1, &mut rng).unwrap() == 4)
            .count();
        assert!((hits as f64 / 1e5 - 0.78125).abs() <= 0.005);
    }

    #[test]
    fn quantum_zero_iterations_is_uniform() {
        let mut rng = match_stream(3, 0);
        let oracle = OracleSpec::new(3, 4).unwrap();
        let player = QuantumPlayer::new(&oracle, 0).unwrap();
        let hits = (0..100_000)
            .filter(|_| player.propose(&mut rng).unwrap() == 4)
            .count();
        assert!((hits as f64 / 1e5 - 0.125).abs() <= 0.005);
    }

    #[test]
    fn cached_player_matches_fresh_preparation() {
        let oracle = OracleSpec::new(4, 9).unwrap();
        let player = QuantumPlayer::new(&oracle, 2).unwrap();
        let mut a = match_stream(4, 0);
        let mut b = match_stream(4, 0);
        for _ in 0..1000 {
            assert_eq!(
                player.propose(&mut a).unwrap(),
                quantum_propose(4, &oracle, 2, &mut b).unwrap()
            );
        }
    }

    #[test]
    fn memoryless_frequencies() {
        let mut rng = match_stream(5, 0);
        assert!((0..100).all(|_| classic_memoryless_propose(1, &mut rng) == 0));

        let mut counts = [0usize; 8];
        for _ in 0..80_000 {
            counts[classic_memoryless_propose(8, &mut rng)] += 1;
        }
        assert!(counts
            .iter()
            .all(|&c| (c as f64 / 8e4 - 0.125).abs() <= 0.005));

        let ones = (0..40_000)
            .filter(|_| classic_memoryless_propose(2, &mut rng) == 1)
            .count();
        assert!((ones as f64 / 4e4 - 0.5).abs() <= 0.01);
    }

    #[test]
    fn sweep_is_without_replacement() {
        let mut rng = match_stream(6, 0);
        let mut sweep = SweepState::new(8);
        let mut seen: Vec<usize> = (0..4)
            .map(|_| classic_sweep_propose(&mut sweep, &mut rng).unwrap())
            .collect();
        assert_eq!(sweep.visited_count(), 4);
        assert!(seen.iter().all(|&i| sweep.is_visited(i)));
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 4);
        for _ in 0..4 {
            classic_sweep_propose(&mut sweep, &mut rng).unwrap();
        }
        assert!(matches!(
            classic_sweep_propose(&mut sweep, &mut rng),
            Err(Error::Exhausted(8))
        ));
        sweep.reset();
        assert_eq!(sweep.visited_count(), 0);
    }

    #[test]
    fn sweep_half_coverage() {
        let mut rng = match_stream(7, 0);
        let mut sweep = SweepState::new(8);
        let mut hits = 0;
        for _ in 0..100_000 {
            sweep.reset();
            if (0..4).any(|_| classic_sweep_propose(&mut sweep, &mut rng).unwrap() == 2) {
                hits += 1;
            }
        }
        assert!((hits as f64 / 1e5 - 0.5).abs() <= 0.005);
    }

    #[test]
    fn sweep_two_states() {
        let mut rng = match_stream(8, 0);
        let zeros = (0..40_000)
            .filter(|_| classic_sweep_propose(&mut SweepState::new(2), &mut rng).unwrap() == 0)
            .count();
        assert!((zeros as f64 / 4e4 - 0.5).abs() <= 0.01);
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in [ClassicStrategy::Memoryless, ClassicStrategy::Sweep] {
            assert_eq!(s.as_str().parse::<ClassicStrategy>().unwrap(), s);
        }
        assert!("greedy".parse::<ClassicStrategy>().is_err());
    }
}
