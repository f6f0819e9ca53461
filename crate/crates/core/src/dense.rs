//! Literal matrix form of the search, for cross-validation on small registers.
//!
//! Builds `H^{⊗n}` by repeated Kronecker products of the one-qubit Hadamard,
//! the oracle as a diagonal `±1` matrix, and the conditional phase shift
//! `U_R = 2|0⟩⟨0| - I`. One iterate is `H^{⊗n} · U_R · H^{⊗n} · U_f`.
//! Nothing here shares code with [`crate::statevector`].

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest register the dense path will build (16×16 matrices).
pub const MAX_DENSE_QUBITS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, Complex64::new(x, 0.0));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// One-qubit Hadamard.
pub fn hadamard() -> DenseMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    DenseMatrix::from_rows(&[&[h, h], &[h, -h]])
}

/// `H^{⊗n}`; for `n = 0` the 1×1 identity.
pub fn hadamard_n(n_qubits: usize) -> DenseMatrix {
    (0..n_qubits).fold(DenseMatrix::identity(1), |acc, _| acc.kron(&hadamard()))
}

/// Diagonal oracle with `-1` at the marked index.
pub fn oracle_matrix(n_qubits: usize, target: usize) -> DenseMatrix {
    let dim = 1 << n_qubits;
    let mut m = DenseMatrix::identity(dim);
    m.set(target, target, Complex64::new(-1.0, 0.0));
    m
}

/// `2|0⟩⟨0| - I`.
pub fn conditional_phase_shift(n_qubits: usize) -> DenseMatrix {
    let dim = 1 << n_qubits;
    let mut m = DenseMatrix::identity(dim);
    for i in 0..dim {
        m.set(i, i, Complex64::new(-1.0, 0.0));
    }
    m.set(0, 0, Complex64::new(1.0, 0.0));
    m
}

/// Full Grover iterate as one matrix.
pub fn grover_matrix(n_qubits: usize, target: usize) -> DenseMatrix {
    let h = hadamard_n(n_qubits);
    h.matmul(&conditional_phase_shift(n_qubits))
        .matmul(&h)
        .matmul(&oracle_matrix(n_qubits, target))
}

/// Amplitudes after `iterations` iterates, starting from `H^{⊗n}|0…0⟩`.
pub fn dense_grover(n_qubits: usize, target: usize, iterations: usize) -> Result<Vec<Complex64>> {
    if n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::Size(n_qubits));
    }
    let dim = 1 << n_qubits;
    if target >= dim {
        return Err(Error::IndexOutOfRange { index: target, dim });
    }
    let mut initial = vec![Complex64::new(0.0, 0.0); dim];
    initial[0] = Complex64::new(1.0, 0.0);
    let mut state = hadamard_n(n_qubits).apply(&initial);
    let g = grover_matrix(n_qubits, target);
    for _ in 0..iterations {
        state = g.apply(&state);
    }
    Ok(state)
}
