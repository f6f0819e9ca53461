//! Dense complex state vector for a single search register.
//!
//! The register holds `N = 2^n` amplitudes. The only operators needed by the
//! search are the phase oracle and the inversion about the mean, both of
//! which act in `O(N)` without building matrices. The matrix form lives in
//! [`crate::dense`] and is used only to cross-check this module.

use std::collections::HashSet;
use std::io::Read;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest register the simulator will allocate (N = 1,048,576).
pub const MAX_QUBITS: usize = 20;

/// Allowed drift of the squared norm before a state is rejected.
pub const NORM_TOLERANCE: f64 = 1e-6;

fn check_qubits(n_qubits: usize) -> Result<usize> {
    if n_qubits > MAX_QUBITS {
        return Err(Error::Size(n_qubits));
    }
    Ok(1usize << n_qubits)
}

/// Upper bound on the number of Grover iterates `run_grover` accepts for a
/// register of dimension `dim`.
pub fn max_iterations(dim: usize) -> usize {
    ((10.0 * (dim as f64).sqrt()).floor() as usize).max(40)
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    /// Computational basis state `|index⟩`. `basis(n, 0)` is the all-zeros
    /// start state of the search.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let dim = check_qubits(n_qubits)?;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, dim });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Builds a state from raw amplitudes, rejecting wrong lengths and
    /// unnormalized vectors.
    pub fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = check_qubits(n_qubits)?;
        if amplitudes.len() != dim {
            return Err(Error::Config(format!(
                "expected {dim} amplitudes, got {}",
                amplitudes.len()
            )));
        }
        let state = Self {
            n_qubits,
            amplitudes,
        };
        state.check_normalized()?;
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn check_normalized(&self) -> Result<()> {
        let norm = self.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::State(norm));
        }
        Ok(())
    }

    /// Phase oracle: negates the amplitude of the marked index.
    pub fn apply_oracle(&mut self, oracle: &OracleSpec) -> Result<()> {
        if oracle.n_qubits != self.n_qubits {
            return Err(Error::Dimension {
                state: self.n_qubits,
                oracle: oracle.n_qubits,
            });
        }
        let a = &mut self.amplitudes[oracle.target];
        *a = -*a;
        Ok(())
    }

    /// Inversion about the mean, `a_i -> 2m - a_i`. This is the algebraic
    /// form of `H (2|0⟩⟨0| - I) H`.
    pub fn apply_diffusion(&mut self) {
        let sum: Complex64 = self.amplitudes.iter().sum();
        let twice_mean = sum * (2.0 / self.dim() as f64);
        for a in &mut self.amplitudes {
            *a = twice_mean - *a;
        }
    }

    /// One Grover iterate: oracle followed by diffusion.
    pub fn grover_iterate(&mut self, oracle: &OracleSpec) -> Result<()> {
        self.apply_oracle(oracle)?;
        self.apply_diffusion();
        Ok(())
    }

    /// `|a_index|^2`.
    pub fn probability(&self, index: usize) -> Result<f64> {
        self.amplitudes
            .get(index)
            .map(Complex64::norm_sqr)
            .ok_or(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            })
    }

    /// Samples a basis index with the Born rule. The state itself is left
    /// untouched; callers decide whether to re-prepare.
    pub fn measure<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<usize> {
        self.check_normalized()?;
        let r: f64 = rng.gen();
        let mut cumulative = 0.0;
        let mut last_nonzero = 0;
        for (i, a) in self.amplitudes.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            cumulative += p;
            last_nonzero = i;
            if r < cumulative {
                return Ok(i);
            }
        }
        // r landed in the rounding gap above the accumulated total
        Ok(last_nonzero)
    }
}

/// Uniform superposition `H^{⊗n}|0…0⟩`: every amplitude equals `1/√N`.
pub fn uniform_superposition(n_qubits: usize) -> Result<QuantumState> {
    let dim = check_qubits(n_qubits)?;
    let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    Ok(QuantumState {
        n_qubits,
        amplitudes: vec![amp; dim],
    })
}

/// Prepares the uniform superposition and applies `iterations` Grover
/// iterates.
pub fn run_grover(n_qubits: usize, oracle: &OracleSpec, iterations: usize) -> Result<QuantumState> {
    let mut state = uniform_superposition(n_qubits)?;
    let bound = max_iterations(state.dim());
    if iterations > bound {
        return Err(Error::Config(format!(
            "{iterations} Grover iterations exceed the bound {bound} for N={}",
            state.dim()
        )));
    }
    for _ in 0..iterations {
        state.grover_iterate(oracle)?;
    }
    state.check_normalized()?;
    Ok(state)
}

/// The marked index `t`, i.e. the single `w` with `f(w) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleSpec {
    target: usize,
    n_qubits: usize,
}

impl OracleSpec {
    pub fn new(n_qubits: usize, target: usize) -> Result<Self> {
        let dim = check_qubits(n_qubits)?;
        if target >= dim {
            return Err(Error::IndexOutOfRange { index: target, dim });
        }
        Ok(Self { target, n_qubits })
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// The oracle function `f(w)`.
    pub fn marks(&self, index: usize) -> bool {
        index == self.target
    }
}

/// Index → feature lookup table. Position `i` holds the feature of woman `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatureTable {
    features: Vec<String>,
}

impl FeatureTable {
    /// Accepts entries in any order; indices must be exactly `0..len` and
    /// labels must be unique.
    pub fn from_entries<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, S)>,
        S: Into<String>,
    {
        let mut slots: Vec<Option<String>> = Vec::new();
        for (index, label) in entries {
            if index >= slots.len() {
                slots.resize(index + 1, None);
            }
            if slots[index].is_some() {
                return Err(Error::MalformedTable(format!(
                    "index {index} appears twice"
                )));
            }
            slots[index] = Some(label.into());
        }
        let mut features = Vec::with_capacity(slots.len());
        for (i, slot) in slots.into_iter().enumerate() {
            features.push(slot.ok_or_else(|| Error::MalformedTable(format!("index {i} missing")))?);
        }
        if features.is_empty() {
            return Err(Error::MalformedTable("table is empty".into()));
        }
        let mut seen = HashSet::new();
        for label in &features {
            if !seen.insert(label.as_str()) {
                return Err(Error::MalformedTable(format!(
                    "duplicate feature {label:?}"
                )));
            }
        }
        Ok(Self { features })
    }

    /// Reads a two-column `index,feature` CSV with a header row.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.len() != 2 || &headers[0] != "index" || &headers[1] != "feature" {
            return Err(Error::MalformedTable(format!(
                "expected header `index,feature`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut entries = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let index = record[0]
                .parse::<usize>()
                .map_err(|e| Error::MalformedTable(format!("bad index {:?}: {e}", &record[0])))?;
            entries.push((index, record[1].to_string()));
        }
        Self::from_entries(entries)
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn feature(&self, index: usize) -> Option<&str> {
        self.features.get(index).map(String::as_str)
    }
}

/// Looks the desired feature up in the table and returns the oracle that
/// marks the matching index. The table size must be a power of two.
pub fn build_oracle(table: &FeatureTable, desired_feature: &str) -> Result<OracleSpec> {
    let dim = table.len();
    if !dim.is_power_of_two() {
        return Err(Error::MalformedTable(format!(
            "table size {dim} is not a power of two"
        )));
    }
    let mut hits = table
        .features
        .iter()
        .enumerate()
        .filter(|(_, f)| f.as_str() == desired_feature)
        .map(|(i, _)| i);
    let target = hits
        .next()
        .ok_or_else(|| Error::NotFound(desired_feature.to_string()))?;
    if hits.next().is_some() {
        return Err(Error::MalformedTable(format!(
            "feature {desired_feature:?} is not unique"
        )));
    }
    OracleSpec::new(dim.trailing_zeros() as usize, target)
}
