//! The unitary classifier: `Q2 = J/2 - I` on each pair of input qubits.
//!
//! `Q2` is realized as `H⊗H`, then `Z⊗Z`, then `CZ`, then `H⊗H` (in time
//! order). The rank-`n` classifier is the `n`-fold tensor power with the
//! leftmost factor on the most significant pair. Dense matrices exist for
//! cross-checking only; circuits run the per-pair gate path.

use crate::error::{Error, Result};
use crate::simulator::{Gate, StateVector};

/// Largest rank for which [`classifier_matrix`] will build a dense matrix.
pub const MAX_DENSE_RANK: u32 = 4;

/// Square real matrix whose dimension is a power of 4, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    dim: usize,
    entries: Vec<f64>,
}

impl DenseUnitary {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1.0;
        }
        DenseUnitary { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// Kronecker product `self ⊗ low`; `self` acts on the high qubits.
    pub fn kron(&self, low: &DenseUnitary) -> DenseUnitary {
        let dim = self.dim * low.dim;
        let mut entries = vec![0.0; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                entries[r * dim + c] =
                    self.get(r / low.dim, c / low.dim) * low.get(r % low.dim, c % low.dim);
            }
        }
        DenseUnitary { dim, entries }
    }

    pub fn transpose(&self) -> DenseUnitary {
        let d = self.dim;
        let mut entries = vec![0.0; d * d];
        for r in 0..d {
            for c in 0..d {
                entries[c * d + r] = self.get(r, c);
            }
        }
        DenseUnitary { dim: d, entries }
    }

    pub fn matmul(&self, rhs: &DenseUnitary) -> DenseUnitary {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut entries = vec![0.0; d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * rhs.get(k, c);
                }
            }
        }
        DenseUnitary { dim: d, entries }
    }

    pub fn max_abs_diff(&self, other: &DenseUnitary) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `UᵀU = I` within `tol`.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        self.transpose()
            .matmul(self)
            .max_abs_diff(&DenseUnitary::identity(self.dim))
            <= tol
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        if state.dim() != self.dim {
            return Err(Error::QubitMismatch {
                expected: self.dim.trailing_zeros() as usize,
                actual: state.qubits(),
            });
        }
        let amps = state.amplitudes();
        let out = (0..self.dim)
            .map(|r| self.row(r).iter().zip(amps).map(|(m, a)| m * a).sum())
            .collect();
        StateVector::from_amplitudes(out)
    }

    /// Builds the matrix of a linear map from its action on basis states.
    pub fn from_columns(qubits: usize, f: impl Fn(&mut StateVector) -> Result<()>) -> Result<Self> {
        let dim = 1usize << qubits;
        let mut entries = vec![0.0; dim * dim];
        for c in 0..dim {
            let mut s = StateVector::basis_state(qubits, c)?;
            f(&mut s)?;
            for (r, a) in s.amplitudes().iter().enumerate() {
                entries[r * dim + c] = *a;
            }
        }
        Ok(DenseUnitary { dim, entries })
    }
}

/// `-1/2` on the diagonal, `+1/2` elsewhere.
pub fn q2_matrix() -> DenseUnitary {
    let mut entries = vec![0.5; 16];
    for i in 0..4 {
        entries[i * 4 + i] = -0.5;
    }
    DenseUnitary { dim: 4, entries }
}

pub fn classifier_matrix(n: u32) -> Result<DenseUnitary> {
    if n == 0 || n > MAX_DENSE_RANK {
        return Err(Error::RankOutOfRange {
            rank: n,
            max: MAX_DENSE_RANK,
        });
    }
    let q2 = q2_matrix();
    Ok((1..n).fold(q2.clone(), |acc, _| q2.kron(&acc)))
}

/// Gates of `Q2` on qubits `low` and `low + 1`, in time order.
pub fn q2_gates(low: usize) -> [Gate; 7] {
    let high = low + 1;
    [
        Gate::H(low),
        Gate::H(high),
        Gate::Z(low),
        Gate::Z(high),
        Gate::Cz(low, high),
        Gate::H(low),
        Gate::H(high),
    ]
}

/// Applies `Q2` to the pair `(low_qubit, low_qubit + 1)`.
pub fn apply_q2(state: &mut StateVector, low_qubit: usize) -> Result<()> {
    let high = low_qubit + 1;
    if high >= state.qubits() {
        return Err(Error::QubitOutOfRange {
            index: high,
            qubits: state.qubits(),
        });
    }
    state
        .apply_h_pair(low_qubit, high)?
        .apply_z(low_qubit)?
        .apply_z(high)?
        .apply_cz(low_qubit, high)?
        .apply_h_pair(low_qubit, high)?;
    Ok(())
}

/// Applies `Q2` to every pair `(2k, 2k + 1)` of a `2n`-qubit register.
pub fn apply_classifier(state: &mut StateVector, n: u32) -> Result<()> {
    let expected = 2 * n as usize;
    if n == 0 || state.qubits() != expected {
        return Err(Error::QubitMismatch {
            expected,
            actual: state.qubits(),
        });
    }
    for k in 0..n as usize {
        apply_q2(state, 2 * k)?;
    }
    Ok(())
}
