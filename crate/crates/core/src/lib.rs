//! Exact statevector workbench for classifying imbalanced Boolean functions
//! with a single oracle query.
//!
//! The rank-`n` pattern basis holds `4^n` pairwise orthogonal truth tables on
//! `2n` inputs. After a Hadamard wall and one phase-oracle query, the input
//! register of each basis function is orthogonal to all the others, and the
//! classifier `Q2^⊗n` rotates it onto the computational basis ket carrying
//! the function's index. A function and its negation land on the same ket;
//! one extra classical query tells them apart.
//!
//! ```
//! use patternq::{classify, PatternVector};
//!
//! let hidden: PatternVector = "1000 1000 1000 0111".parse().unwrap();
//! let result = classify(&hidden).unwrap();
//! assert_eq!(result.bits.to_string(), "0011");
//! assert_eq!(result.probability, 1.0);
//! assert_eq!(result.queries_used, 1);
//! ```

pub mod bits;
pub mod circuit;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod patterns;
pub mod program;
pub mod simulator;

pub use bits::BitVector;
pub use circuit::{
    build_circuit, classify, classify_exhaustive, play_game, run, CircuitSpec,
    ClassificationResult, GameTranscript, RunOptions,
};
pub use classifier::{apply_classifier, apply_q2, classifier_matrix, q2_matrix, DenseUnitary};
pub use error::{Error, Result};
pub use oracle::{Oracle, Resolution};
pub use patterns::{basis, Membership, PatternBasis, PatternVector, Ratio, TruthTable};
pub use simulator::{Histogram, StateVector};
