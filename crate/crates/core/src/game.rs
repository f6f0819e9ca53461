//! Quantum vs classic turn protocols and the `D/T` statistic.
//!
//! In every turn the classic player C moves first and makes
//! `classic_attempts_per_turn` proposals; the quantum player Q then makes a
//! single proposal. A proposal that hits the chosen woman is accepted with
//! the player's acceptance probability. Both success flags are counted, with
//! no preemption between the players.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::analytic::closed_form_probability;
use crate::error::{Error, Result};
use crate::kv::KvMap;
use crate::statevector::{max_iterations, OracleSpec, MAX_QUBITS};
use crate::strategies::{
    classic_memoryless_propose, classic_sweep_propose, ClassicStrategy, QuantumPlayer, SweepState,
};

/// Default number of turns per match.
pub const DEFAULT_TRIALS: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameVariant {
    /// One attempt each.
    Game1,
    /// `N/2` classic attempts against one quantum attempt.
    Game2,
}

impl fmt::Display for GameVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Game1 => "1",
            Self::Game2 => "2",
        })
    }
}

impl FromStr for GameVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Self::Game1),
            "2" => Ok(Self::Game2),
            other => Err(Error::Config(format!("unknown game variant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GameConfig {
    pub n_qubits: usize,
    pub variant: GameVariant,
    pub trials: u64,
    pub classic_attempts_per_turn: usize,
    pub quantum_iterations: usize,
    pub classic_strategy: ClassicStrategy,
    pub seed: u64,
}

impl GameConfig {
    /// Configuration with the standard budgets for `variant`: one classic
    /// attempt in Game 1, `N/2` in Game 2, one Grover iterate for Q.
    pub fn new(variant: GameVariant, n_qubits: usize) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::Size(n_qubits));
        }
        let dim = 1usize << n_qubits;
        let classic_attempts_per_turn = match variant {
            GameVariant::Game1 => 1,
            GameVariant::Game2 if dim >= 2 => dim / 2,
            GameVariant::Game2 => {
                return Err(Error::Config(
                    "Game 2 needs at least two women (N/2 >= 1)".into(),
                ))
            }
        };
        Ok(Self {
            n_qubits,
            variant,
            trials: DEFAULT_TRIALS,
            classic_attempts_per_turn,
            quantum_iterations: 1,
            classic_strategy: ClassicStrategy::Memoryless,
            seed: 0,
        })
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_qubits > MAX_QUBITS {
            return Err(Error::Size(self.n_qubits));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be positive".into()));
        }
        if self.classic_attempts_per_turn == 0 {
            return Err(Error::Config(
                "classic attempts per turn must be positive".into(),
            ));
        }
        if self.variant == GameVariant::Game1 && self.classic_attempts_per_turn != 1 {
            return Err(Error::Config(
                "Game 1 allows exactly one classic attempt per turn".into(),
            ));
        }
        if self.classic_strategy == ClassicStrategy::Sweep
            && self.classic_attempts_per_turn > self.dim()
        {
            return Err(Error::Config(format!(
                "sweep strategy cannot make {} distinct proposals among {} women",
                self.classic_attempts_per_turn,
                self.dim()
            )));
        }
        let bound = max_iterations(self.dim());
        if self.quantum_iterations > bound {
            return Err(Error::Config(format!(
                "{} Grover iterations exceed the bound {bound}",
                self.quantum_iterations
            )));
        }
        Ok(())
    }

    /// Flat `key=value` form, one pair per line.
    pub fn to_kv(&self) -> String {
        let mut kv = KvMap::new();
        self.write_kv(&mut kv);
        kv.to_string()
    }

    pub fn write_kv(&self, kv: &mut KvMap) {
        kv.insert("variant", self.variant);
        kv.insert("qubits", self.n_qubits);
        kv.insert("trials", self.trials);
        kv.insert("classic_attempts", self.classic_attempts_per_turn);
        kv.insert("grover_iterations", self.quantum_iterations);
        kv.insert("classic_strategy", self.classic_strategy);
        kv.insert("seed", self.seed);
    }

    pub fn from_kv(text: &str) -> Result<Self> {
        Self::from_kv_map(&text.parse()?)
    }

    /// Reads a config from parsed pairs. `variant` and `qubits` are required;
    /// everything else falls back to the variant defaults.
    pub fn from_kv_map(kv: &KvMap) -> Result<Self> {
        let variant: GameVariant = kv.require("variant")?;
        let mut cfg = Self::new(variant, kv.require("qubits")?)?;
        if let Some(v) = kv.get_parsed("trials")? {
            cfg.trials = v;
        }
        if let Some(v) = kv.get_parsed("classic_attempts")? {
            cfg.classic_attempts_per_turn = v;
        }
        if let Some(v) = kv.get_parsed("grover_iterations")? {
            cfg.quantum_iterations = v;
        }
        if let Some(v) = kv.get_parsed("classic_strategy")? {
            cfg.classic_strategy = v;
        }
        if let Some(v) = kv.get_parsed("seed")? {
            cfg.seed = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// The chosen woman and how likely she is to accept each player.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WomanProfile {
    pub target: usize,
    pub p_accept_classic: f64,
    pub p_accept_quantum: f64,
}

impl WomanProfile {
    pub fn new(target: usize, p_accept_classic: f64, p_accept_quantum: f64) -> Result<Self> {
        for (name, p) in [("P_c", p_accept_classic), ("P_q", p_accept_quantum)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Config(format!("{name} = {p} is not a probability")));
            }
        }
        Ok(Self {
            target,
            p_accept_classic,
            p_accept_quantum,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TurnOutcome {
    pub c_success: bool,
    pub q_success: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GameStats {
    pub q_successes: u64,
    pub c_successes: u64,
    pub trials: u64,
}

impl GameStats {
    pub fn record(&mut self, turn: TurnOutcome) {
        self.trials += 1;
        self.c_successes += u64::from(turn.c_success);
        self.q_successes += u64::from(turn.q_success);
    }

    /// `(Q successes - C successes) / T`.
    pub fn d_over_t(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        (self.q_successes as f64 - self.c_successes as f64) / self.trials as f64
    }
}

/// Per-match scratch: the prepared quantum state and the sweep bookkeeping.
struct Table {
    classic_strategy: ClassicStrategy,
    classic_attempts: usize,
    dim: usize,
    quantum: QuantumPlayer,
    sweep: SweepState,
    woman: WomanProfile,
}

impl Table {
    fn new(cfg: &GameConfig, woman: &WomanProfile) -> Result<Self> {
        cfg.validate()?;
        let oracle = OracleSpec::new(cfg.n_qubits, woman.target)?;
        Ok(Self {
            classic_strategy: cfg.classic_strategy,
            classic_attempts: cfg.classic_attempts_per_turn,
            dim: cfg.dim(),
            quantum: QuantumPlayer::new(&oracle, cfg.quantum_iterations)?,
            sweep: SweepState::new(cfg.dim()),
            woman: *woman,
        })
    }

    fn turn<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<TurnOutcome> {
        let target = self.woman.target;
        let mut outcome = TurnOutcome::default();

        self.sweep.reset();
        for _ in 0..self.classic_attempts {
            let proposal = match self.classic_strategy {
                ClassicStrategy::Memoryless => classic_memoryless_propose(self.dim, rng),
                ClassicStrategy::Sweep => classic_sweep_propose(&mut self.sweep, rng)?,
            };
            if proposal == target && rng.gen::<f64>() < self.woman.p_accept_classic {
                outcome.c_success = true;
            }
        }

        if self.quantum.propose(rng)? == target && rng.gen::<f64>() < self.woman.p_accept_quantum {
            outcome.q_success = true;
        }
        Ok(outcome)
    }
}

/// Plays one turn: C's attempts first, then Q's single attempt.
pub fn play_turn<R: Rng + ?Sized>(
    cfg: &GameConfig,
    woman: &WomanProfile,
    rng: &mut R,
) -> Result<TurnOutcome> {
    Table::new(cfg, woman)?.turn(rng)
}

/// Plays `cfg.trials` independent turns.
pub fn run_match<R: Rng + ?Sized>(
    cfg: &GameConfig,
    woman: &WomanProfile,
    rng: &mut R,
) -> Result<GameStats> {
    let mut table = Table::new(cfg, woman)?;
    let mut stats = GameStats::default();
    for _ in 0..cfg.trials {
        stats.record(table.turn(rng)?);
    }
    Ok(stats)
}

/// Per-turn probability that C succeeds.
pub fn classic_success_probability(cfg: &GameConfig, p_accept_classic: f64) -> f64 {
    let dim = cfg.dim() as f64;
    let attempts = cfg.classic_attempts_per_turn;
    match cfg.classic_strategy {
        ClassicStrategy::Memoryless => 1.0 - (1.0 - p_accept_classic / dim).powi(attempts as i32),
        ClassicStrategy::Sweep => p_accept_classic * (attempts.min(cfg.dim()) as f64) / dim,
    }
}

/// Per-turn probability that Q succeeds.
pub fn quantum_success_probability(cfg: &GameConfig, p_accept_quantum: f64) -> f64 {
    closed_form_probability(cfg.dim(), cfg.quantum_iterations) * p_accept_quantum
}

/// Analytic expectation of `D/T`.
pub fn expected_dt(cfg: &GameConfig, woman: &WomanProfile) -> f64 {
    quantum_success_probability(cfg, woman.p_accept_quantum)
        - classic_success_probability(cfg, woman.p_accept_classic)
}
