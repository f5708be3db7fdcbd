//! Real-amplitude statevector engine.
//!
//! Qubit `k` is bit `k` of the basis index (little-endian). Every gate the
//! classifier needs is real, so amplitudes are plain `f64`.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 24;

/// Default tolerance for approximate amplitude comparisons.
pub const TOLERANCE: f64 = 1e-12;

/// The gates the classification circuits are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    Z(usize),
    Cz(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    qubits: usize,
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn zero_state(qubits: usize) -> Result<Self> {
        Self::basis_state(qubits, 0)
    }

    pub fn basis_state(qubits: usize, index: usize) -> Result<Self> {
        if qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                qubits,
                max: MAX_QUBITS,
            });
        }
        let dim = 1usize << qubits;
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, size: dim });
        }
        let mut amplitudes = vec![0.0; dim];
        amplitudes[index] = 1.0;
        Ok(StateVector { qubits, amplitudes })
    }

    /// Wraps raw amplitudes. The length must be a power of two; the caller is
    /// responsible for normalization.
    pub fn from_amplitudes(amplitudes: Vec<f64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::BadDimension(dim));
        }
        let qubits = dim.trailing_zeros() as usize;
        if qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                qubits,
                max: MAX_QUBITS,
            });
        }
        Ok(StateVector { qubits, amplitudes })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [f64] {
        &mut self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.qubits {
            Err(Error::QubitOutOfRange {
                index: q,
                qubits: self.qubits,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, q1: usize, q2: usize) -> Result<()> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(Error::SameQubit(q1));
        }
        Ok(())
    }

    pub fn apply_h(&mut self, q: usize) -> Result<&mut Self> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        for i in 0..self.dim() {
            if i & mask == 0 {
                let a = self.amplitudes[i];
                let b = self.amplitudes[i | mask];
                self.amplitudes[i] = (a + b) * FRAC_1_SQRT_2;
                self.amplitudes[i | mask] = (a - b) * FRAC_1_SQRT_2;
            }
        }
        Ok(self)
    }

    /// `H ⊗ H` on two distinct qubits as one 4x4 step with entries `±1/2`,
    /// which keeps dyadic amplitudes exact.
    pub fn apply_h_pair(&mut self, q1: usize, q2: usize) -> Result<&mut Self> {
        self.check_pair(q1, q2)?;
        let (m1, m2) = (1usize << q1, 1usize << q2);
        for i in 0..self.dim() {
            if i & (m1 | m2) == 0 {
                let idx = [i, i | m1, i | m2, i | m1 | m2];
                let [a, b, c, d] = idx.map(|k| self.amplitudes[k]);
                self.amplitudes[idx[0]] = 0.5 * (a + b + c + d);
                self.amplitudes[idx[1]] = 0.5 * (a - b + c - d);
                self.amplitudes[idx[2]] = 0.5 * (a + b - c - d);
                self.amplitudes[idx[3]] = 0.5 * (a - b - c + d);
            }
        }
        Ok(self)
    }

    pub fn apply_x(&mut self, q: usize) -> Result<&mut Self> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        for i in 0..self.dim() {
            if i & mask == 0 {
                self.amplitudes.swap(i, i | mask);
            }
        }
        Ok(self)
    }

    pub fn apply_z(&mut self, q: usize) -> Result<&mut Self> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            if i & mask != 0 {
                *a = -*a;
            }
        }
        Ok(self)
    }

    pub fn apply_cz(&mut self, q1: usize, q2: usize) -> Result<&mut Self> {
        self.check_pair(q1, q2)?;
        let mask = (1usize << q1) | (1usize << q2);
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            if i & mask == mask {
                *a = -*a;
            }
        }
        Ok(self)
    }

    pub fn apply_gate(&mut self, gate: Gate) -> Result<&mut Self> {
        match gate {
            Gate::H(q) => self.apply_h(q),
            Gate::Z(q) => self.apply_z(q),
            Gate::Cz(a, b) => self.apply_cz(a, b),
        }
    }

    pub fn inner_product(&self, other: &StateVector) -> Result<f64> {
        if self.qubits != other.qubits {
            return Err(Error::QubitMismatch {
                expected: self.qubits,
                actual: other.qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Largest elementwise difference; `INFINITY` on a size mismatch.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Whether every amplitude is an exact integer multiple of `2^-k`.
    pub fn is_dyadic(&self, k: u32) -> bool {
        let scale = (1u64 << k) as f64;
        self.amplitudes.iter().all(|a| {
            let s = a * scale;
            s.fract() == 0.0 && s.is_finite()
        })
    }

    pub fn scaled(&self, factor: f64) -> StateVector {
        StateVector {
            qubits: self.qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// Tensor product with `self` on the low qubits.
    pub fn tensor_high(&self, high: &StateVector) -> Result<StateVector> {
        let qubits = self.qubits + high.qubits;
        if qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                qubits,
                max: MAX_QUBITS,
            });
        }
        let mut amplitudes = Vec::with_capacity(1 << qubits);
        for h in &high.amplitudes {
            amplitudes.extend(self.amplitudes.iter().map(|l| l * h));
        }
        Ok(StateVector { qubits, amplitudes })
    }

    /// Basis index of largest probability and that probability. Ties go to
    /// the lowest index.
    pub fn argmax_basis(&self) -> (usize, f64) {
        let mut best = (0, self.amplitudes[0] * self.amplitudes[0]);
        for (i, a) in self.amplitudes.iter().enumerate().skip(1) {
            let p = a * a;
            if p > best.1 {
                best = (i, p);
            }
        }
        best
    }

    pub fn sample(&self, shots: u64, seed: u64) -> Result<Histogram> {
        if shots == 0 {
            return Err(Error::NoShots);
        }
        let weights: Vec<f64> = self.amplitudes.iter().map(|a| a * a).collect();
        let dist = WeightedIndex::new(&weights).map_err(|_| Error::NoShots)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut raw: BTreeMap<usize, u64> = BTreeMap::new();
        for _ in 0..shots {
            *raw.entry(dist.sample(&mut rng)).or_default() += 1;
        }
        let counts = raw
            .into_iter()
            .map(|(i, c)| {
                let key = BitVector::from_index(i as u64, self.qubits);
                (key.to_grouped_string().replace(' ', ""), c)
            })
            .collect();
        Ok(Histogram { counts, shots })
    }
}

/// Outcome counts keyed by MSB-first bit string, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub counts: BTreeMap<String, u64>,
    pub shots: u64,
}

impl Histogram {
    pub fn get(&self, outcome: &str) -> u64 {
        self.counts.get(outcome).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn state(amps: &[f64]) -> StateVector {
        StateVector::from_amplitudes(amps.to_vec()).unwrap()
    }

    #[test]
    fn zero_states() {
        assert_eq!(
            StateVector::zero_state(1).unwrap().amplitudes(),
            &[1.0, 0.0]
        );
        assert_eq!(
            StateVector::zero_state(2).unwrap().amplitudes(),
            &[1.0, 0.0, 0.0, 0.0]
        );
        let s = StateVector::zero_state(4).unwrap();
        assert_eq!(s.dim(), 16);
        assert_eq!(s.argmax_basis(), (0, 1.0));
        assert!(StateVector::zero_state(0).is_err());
        assert!(StateVector::zero_state(25).is_err());
    }

    #[test]
    fn hadamard_kets() {
        let mut plus = StateVector::zero_state(1).unwrap();
        plus.apply_h(0).unwrap();
        assert_eq!(plus.amplitudes(), &[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        let mut minus = StateVector::basis_state(1, 1).unwrap();
        minus.apply_h(0).unwrap();
        assert_eq!(minus.amplitudes(), &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2]);
        assert!(minus.apply_h(1).is_err());
    }

    #[test]
    fn z_gate() {
        let mut s = StateVector::zero_state(1).unwrap();
        s.apply_z(0).unwrap();
        assert_eq!(s.amplitudes(), &[1.0, 0.0]);
        let mut s = StateVector::basis_state(1, 1).unwrap();
        s.apply_z(0).unwrap();
        assert_eq!(s.amplitudes(), &[0.0, -1.0]);
        let mut s = state(&[0.1, 0.2, 0.3, 0.4]);
        s.apply_z(1).unwrap();
        assert_eq!(s.amplitudes(), &[0.1, 0.2, -0.3, -0.4]);
    }

    #[test]
    fn cz_gate() {
        let mut s = StateVector::basis_state(2, 3).unwrap();
        s.apply_cz(0, 1).unwrap();
        assert_eq!(s.amplitudes()[3], -1.0);
        let mut s = StateVector::basis_state(2, 2).unwrap();
        s.apply_cz(0, 1).unwrap();
        assert_eq!(s.amplitudes()[2], 1.0);
        assert_eq!(s.apply_cz(1, 1).err(), Some(Error::SameQubit(1)));
        assert!(s.apply_cz(0, 2).is_err());
    }

    #[test]
    fn inner_products() {
        let z = StateVector::zero_state(1).unwrap();
        let o = StateVector::basis_state(1, 1).unwrap();
        assert_eq!(z.inner_product(&z).unwrap(), 1.0);
        assert_eq!(z.inner_product(&o).unwrap(), 0.0);
        let f0 = state(&[-0.5, 0.5, 0.5, 0.5]);
        let f1 = state(&[0.5, -0.5, 0.5, 0.5]);
        assert_eq!(f0.inner_product(&f1).unwrap(), 0.0);
        assert!(z.inner_product(&f0).is_err());
    }

    #[test]
    fn argmax_examples() {
        let s = StateVector::basis_state(3, 5).unwrap();
        assert_eq!(s.argmax_basis(), (5, 1.0));
        let uniform = state(&[0.5; 4]);
        assert_eq!(uniform.argmax_basis(), (0, 0.25));
    }

    #[test]
    fn h_pair_equals_two_singles() {
        let mut a = state(&[0.1, -0.3, 0.7, 0.2, 0.0, 0.5, -0.1, 0.33]);
        let mut b = a.clone();
        a.apply_h_pair(0, 2).unwrap();
        b.apply_h(0).unwrap().apply_h(2).unwrap();
        assert!(a.approx_eq(&b, 1e-15));
    }

    #[test]
    fn h_pair_is_exact_on_zero_state() {
        let mut s = StateVector::zero_state(4).unwrap();
        s.apply_h_pair(0, 1).unwrap().apply_h_pair(2, 3).unwrap();
        assert!(s.amplitudes().iter().all(|&a| a == 0.25));
        assert!(s.is_dyadic(2));
        assert!(!s.is_dyadic(1));
    }

    #[test]
    fn sample_examples() {
        let s = StateVector::basis_state(4, 3).unwrap();
        let h = s.sample(2048, 11).unwrap();
        assert_eq!(h.counts.len(), 1);
        assert_eq!(h.get("0011"), 2048);

        let s = StateVector::zero_state(2).unwrap();
        let h = s.sample(1, 0).unwrap();
        assert_eq!(h.get("00"), 1);
        assert_eq!(s.sample(0, 0), Err(Error::NoShots));
    }

    #[test]
    fn sample_plus_within_three_sigma() {
        let mut plus = StateVector::zero_state(1).unwrap();
        plus.apply_h(0).unwrap();
        let shots = 100_000u64;
        let h = plus.sample(shots, 42).unwrap();
        // binomial sigma = sqrt(n p (1 - p))
        let sigma = (shots as f64 * 0.25).sqrt();
        for outcome in ["0", "1"] {
            let dev = (h.get(outcome) as f64 - 50_000.0).abs();
            assert!(dev < 3.0 * sigma, "{outcome}: {}", h.get(outcome));
        }
        assert_eq!(h.total(), shots);
        assert_eq!(plus.sample(shots, 42).unwrap(), h);
    }

    fn arb_state(qubits: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec(-1.0f64..1.0, 1 << qubits).prop_filter_map("zero", |v| {
            let n = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            (n > 1e-3)
                .then(|| StateVector::from_amplitudes(v.iter().map(|a| a / n).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn gates_are_involutions(s in arb_state(3), q in 0usize..3, r in 0usize..3) {
            let mut t = s.clone();
            t.apply_h(q).unwrap().apply_h(q).unwrap();
            prop_assert!(t.approx_eq(&s, TOLERANCE));
            let mut t = s.clone();
            t.apply_z(q).unwrap().apply_z(q).unwrap();
            prop_assert!(t.approx_eq(&s, TOLERANCE));
            if q != r {
                let mut t = s.clone();
                t.apply_cz(q, r).unwrap().apply_cz(q, r).unwrap();
                prop_assert!(t.approx_eq(&s, TOLERANCE));
            }
        }

        #[test]
        fn gates_preserve_norm(s in arb_state(4), q in 0usize..4) {
            let mut t = s.clone();
            t.apply_h(q).unwrap().apply_z((q + 1) % 4).unwrap().apply_cz(q, (q + 2) % 4).unwrap();
            t.apply_h_pair(q, (q + 3) % 4).unwrap();
            prop_assert!((t.norm_sqr() - 1.0).abs() < TOLERANCE);
        }

        #[test]
        fn cz_is_symmetric(s in arb_state(3)) {
            let mut a = s.clone();
            let mut b = s;
            a.apply_cz(0, 1).unwrap();
            b.apply_cz(1, 0).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn disjoint_gates_commute(s in arb_state(4)) {
            let mut a = s.clone();
            let mut b = s;
            a.apply_h(0).unwrap().apply_cz(2, 3).unwrap().apply_z(1).unwrap();
            b.apply_z(1).unwrap().apply_cz(2, 3).unwrap().apply_h(0).unwrap();
            prop_assert!(a.approx_eq(&b, TOLERANCE));
        }
    }
}
