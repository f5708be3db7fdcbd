//! Black-box access to a hidden Boolean function.
//!
//! The oracle is synthesized straight from the function's pattern vector and
//! counts every access, quantum or classical.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::patterns::{negate, PatternVector};
use crate::simulator::StateVector;

#[derive(Debug)]
pub struct Oracle {
    pattern: PatternVector,
    queries: AtomicU64,
}

/// Outcome of telling a candidate function apart from its negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Resolution {
    Original,
    Negation,
}

impl Oracle {
    pub fn new(pattern: PatternVector) -> Self {
        Oracle {
            pattern,
            queries: AtomicU64::new(0),
        }
    }

    /// The hidden truth table. Reading it does not count as a query.
    pub fn pattern(&self) -> &PatternVector {
        &self.pattern
    }

    pub fn arity(&self) -> usize {
        self.pattern.arity() as usize
    }

    pub fn query_count(&self) -> u64 {
        self.queries.load(Ordering::SeqCst)
    }

    fn record_query(&self) {
        self.queries.fetch_add(1, Ordering::SeqCst);
    }

    /// `|x> -> (-1)^f(x) |x>` on the input register alone.
    pub fn apply_phase_oracle(&self, state: &mut StateVector) -> Result<()> {
        let expected = self.arity();
        if state.qubits() != expected {
            return Err(Error::QubitMismatch {
                expected,
                actual: state.qubits(),
            });
        }
        for (x, a) in state.amplitudes_mut().iter_mut().enumerate() {
            if self.pattern.value_at(x) {
                *a = -*a;
            }
        }
        self.record_query();
        Ok(())
    }

    /// `|y>|x> -> |y ^ f(x)>|x>`, with the output qubit `y` stored as the
    /// highest-index qubit.
    pub fn apply_xor_oracle(&self, state: &mut StateVector) -> Result<()> {
        let expected = self.arity() + 1;
        if state.qubits() != expected {
            return Err(Error::QubitMismatch {
                expected,
                actual: state.qubits(),
            });
        }
        let out = 1usize << self.arity();
        let amps = state.amplitudes_mut();
        for x in 0..out {
            if self.pattern.value_at(x) {
                amps.swap(x, x | out);
            }
        }
        self.record_query();
        Ok(())
    }

    pub fn classical_eval(&self, x: &BitVector) -> Result<bool> {
        if x.len() != self.arity() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.arity(),
            });
        }
        let idx = (0..x.len()).fold(0usize, |acc, i| acc | (usize::from(x.get(i)) << i));
        self.record_query();
        Ok(self.pattern.value_at(idx))
    }

    /// Decides whether the oracle hides `candidate` or its negation with one
    /// classical query at the all-zero input.
    pub fn disambiguate(&self, candidate: &PatternVector) -> Result<Resolution> {
        if self.pattern != *candidate && self.pattern != negate(candidate) {
            return Err(Error::OutOfPromise);
        }
        let probe = BitVector::zeros(self.arity());
        if self.classical_eval(&probe)? == candidate.value_at(0) {
            Ok(Resolution::Original)
        } else {
            Ok(Resolution::Negation)
        }
    }
}

impl Clone for Oracle {
    fn clone(&self) -> Self {
        Oracle {
            pattern: self.pattern.clone(),
            queries: AtomicU64::new(self.query_count()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::basis;
    use crate::simulator::TOLERANCE;

    fn oracle(s: &str) -> Oracle {
        Oracle::new(s.parse().unwrap())
    }

    fn uniform(qubits: usize) -> StateVector {
        let dim = 1usize << qubits;
        StateVector::from_amplitudes(vec![1.0 / (dim as f64).sqrt(); dim]).unwrap()
    }

    fn minus() -> StateVector {
        let mut m = StateVector::basis_state(1, 1).unwrap();
        m.apply_h(0).unwrap();
        m
    }

    #[test]
    fn phase_oracle_examples() {
        let o = oracle("0001");
        let mut s = uniform(2);
        o.apply_phase_oracle(&mut s).unwrap();
        assert_eq!(s.amplitudes(), &[-0.5, 0.5, 0.5, 0.5]);
        assert_eq!(o.query_count(), 1);

        let o = oracle("0100");
        let mut s = uniform(2);
        o.apply_phase_oracle(&mut s).unwrap();
        assert_eq!(s.amplitudes(), &[0.5, 0.5, -0.5, 0.5]);

        let o = oracle("0000");
        let before = StateVector::from_amplitudes(vec![0.1, 0.7, -0.2, 0.3]).unwrap();
        let mut s = before.clone();
        o.apply_phase_oracle(&mut s).unwrap();
        assert_eq!(s, before);

        assert!(o.apply_phase_oracle(&mut uniform(3)).is_err());
        assert_eq!(o.query_count(), 1);
    }

    #[test]
    fn xor_oracle_on_basis_states() {
        let o = oracle("0001");
        // qubit 2 is the output register
        let mut s = StateVector::basis_state(3, 0b000).unwrap();
        o.apply_xor_oracle(&mut s).unwrap();
        assert_eq!(s.argmax_basis(), (0b100, 1.0));
        let mut s = StateVector::basis_state(3, 0b100).unwrap();
        o.apply_xor_oracle(&mut s).unwrap();
        assert_eq!(s.argmax_basis(), (0b000, 1.0));
        let mut s = StateVector::basis_state(3, 0b011).unwrap();
        o.apply_xor_oracle(&mut s).unwrap();
        assert_eq!(s.argmax_basis(), (0b011, 1.0));
        assert!(o.apply_xor_oracle(&mut uniform(2)).is_err());
        assert_eq!(o.query_count(), 3);
    }

    #[test]
    fn xor_with_minus_output_equals_phase() {
        for rank in 1..=2 {
            for p in basis(rank).unwrap().iter() {
                let o = Oracle::new(p.clone());
                let input = uniform(2 * rank as usize);
                let mut faithful = input.tensor_high(&minus()).unwrap();
                o.apply_xor_oracle(&mut faithful).unwrap();
                let mut folded = input;
                o.apply_phase_oracle(&mut folded).unwrap();
                let expected = folded.tensor_high(&minus()).unwrap();
                assert!(faithful.approx_eq(&expected, TOLERANCE), "{p}");
            }
        }
    }

    #[test]
    fn phase_oracle_is_involution() {
        let o = oracle("1000 1000 1000 0111");
        let before = uniform(4);
        let mut s = before.clone();
        o.apply_phase_oracle(&mut s).unwrap();
        o.apply_phase_oracle(&mut s).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn classical_eval_examples() {
        let o = oracle("0001");
        assert!(o.classical_eval(&"00".parse().unwrap()).unwrap());
        assert!(!o.classical_eval(&"11".parse().unwrap()).unwrap());
        assert!(!oracle("1110")
            .classical_eval(&"00".parse().unwrap())
            .unwrap());
        assert!(o.classical_eval(&"000".parse().unwrap()).is_err());
        assert_eq!(o.query_count(), 2);
    }

    #[test]
    fn disambiguate_examples() {
        let cand = "0001".parse().unwrap();
        let o = oracle("0001");
        assert_eq!(o.disambiguate(&cand).unwrap(), Resolution::Original);
        assert_eq!(o.query_count(), 1);
        assert_eq!(
            oracle("1110").disambiguate(&cand).unwrap(),
            Resolution::Negation
        );

        let o = oracle("0111 0111 0111 1000");
        let cand = "1000 1000 1000 0111".parse().unwrap();
        assert_eq!(o.disambiguate(&cand).unwrap(), Resolution::Negation);
        assert_eq!(o.query_count(), 1);

        let o = oracle("0010");
        assert_eq!(
            o.disambiguate(&"0001".parse().unwrap()),
            Err(Error::OutOfPromise)
        );
        assert_eq!(o.query_count(), 0);
    }

    #[test]
    fn shared_counting_across_threads() {
        let o = oracle("0001");
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for _ in 0..100 {
                        o.classical_eval(&"01".parse().unwrap()).unwrap();
                    }
                });
            }
        });
        assert_eq!(o.query_count(), 400);
    }
}
