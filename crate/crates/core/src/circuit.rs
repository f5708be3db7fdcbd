//! The full classification circuit and the guessing game built on it.
//!
//! A rank-`n` circuit acts on `2n` input qubits: a Hadamard wall, one
//! oracle query, the classifier, and a measurement of every input qubit.
//! For an in-promise hidden function the state before measurement is
//! `±|i>`, where `i` is the function's basis index.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::classifier::{apply_classifier, q2_gates};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, Resolution};
use crate::patterns::{self, basis_member, locate, Membership, PatternVector};
use crate::simulator::{Gate, StateVector, TOLERANCE};

/// Largest rank [`classify`] accepts (16 input qubits).
pub const MAX_CIRCUIT_RANK: u32 = patterns::DEFAULT_MAX_RANK;

/// Default guard for exhaustive runs and the game.
pub const MAX_EXHAUSTIVE_RANK: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    HadamardWall,
    Oracle(PatternVector),
    Classifier,
    MeasureAll,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitSpec {
    rank: u32,
    steps: Vec<Step>,
}

impl CircuitSpec {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn input_qubits(&self) -> usize {
        2 * self.rank as usize
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn hidden(&self) -> &PatternVector {
        match &self.steps[1] {
            Step::Oracle(p) => p,
            _ => unreachable!("step 1 is always the oracle"),
        }
    }

    /// Gate-level text listing, one operation per line.
    pub fn to_text(&self) -> String {
        let q = self.input_qubits();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# classification circuit, rank {}, {} qubits",
            self.rank, q
        );
        for step in &self.steps {
            match step {
                Step::HadamardWall => {
                    for k in 0..q {
                        let _ = writeln!(out, "h q{k}");
                    }
                }
                Step::Oracle(p) => {
                    let _ = writeln!(
                        out,
                        "oracle {}",
                        p.bits().to_grouped_string().replace(' ', "")
                    );
                }
                Step::Classifier => {
                    for pair in 0..self.rank as usize {
                        for g in q2_gates(2 * pair) {
                            let _ = writeln!(out, "{}", gate_text(g));
                        }
                    }
                }
                Step::MeasureAll => out.push_str("measure\n"),
            }
        }
        out
    }
}

fn gate_text(g: Gate) -> String {
    match g {
        Gate::H(q) => format!("h q{q}"),
        Gate::Z(q) => format!("z q{q}"),
        Gate::Cz(a, b) => format!("cz q{a} q{b}"),
    }
}

pub fn build_circuit(n: u32, hidden: PatternVector) -> Result<CircuitSpec> {
    let expected = 1usize << (2 * n);
    if hidden.rank() != n {
        return Err(Error::LengthMismatch {
            left: hidden.len(),
            right: expected,
        });
    }
    Ok(CircuitSpec {
        rank: n,
        steps: vec![
            Step::HadamardWall,
            Step::Oracle(hidden),
            Step::Classifier,
            Step::MeasureAll,
        ],
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Keep the pre-measurement state in the result.
    pub keep_state: bool,
    /// Materialize the output qubit in `|->` and use the XOR oracle.
    pub faithful: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub rank: u32,
    pub index: usize,
    /// `2n`-bit binary form of `index`, MSB first.
    pub bits: BitVector,
    pub probability: f64,
    pub queries_used: u64,
    pub membership: Membership,
    /// False when the hidden function lies outside the hierarchy.
    pub in_promise: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_state: Option<StateVector>,
}

impl ClassificationResult {
    pub fn is_negation(&self) -> bool {
        matches!(self.membership, Membership::NegationOf(_))
    }
}

/// Uniform superposition over `2n` qubits, built pairwise so every amplitude
/// is exactly `2^-n`.
fn hadamard_wall(state: &mut StateVector, input_qubits: usize) -> Result<()> {
    for k in (0..input_qubits).step_by(2) {
        state.apply_h_pair(k, k + 1)?;
    }
    Ok(())
}

/// Input-register state right after the oracle query.
pub fn post_oracle_state(oracle: &Oracle, n: u32) -> Result<StateVector> {
    let mut s = StateVector::zero_state(2 * n as usize)?;
    hadamard_wall(&mut s, 2 * n as usize)?;
    oracle.apply_phase_oracle(&mut s)?;
    Ok(s)
}

fn minus_state() -> StateVector {
    let mut m = StateVector::basis_state(1, 1).expect("one qubit");
    m.apply_h(0).expect("qubit 0");
    m
}

/// Folded pipeline: phase oracle on the input register only.
pub fn final_state(oracle: &Oracle, n: u32) -> Result<StateVector> {
    let mut s = post_oracle_state(oracle, n)?;
    apply_classifier(&mut s, n)?;
    Ok(s)
}

/// Faithful pipeline on `2n + 1` qubits; the output qubit is the highest.
pub fn final_state_faithful(oracle: &Oracle, n: u32) -> Result<StateVector> {
    let inputs = 2 * n as usize;
    let mut s = StateVector::zero_state(inputs + 1)?;
    s.apply_x(inputs)?.apply_h(inputs)?;
    hadamard_wall(&mut s, inputs)?;
    oracle.apply_xor_oracle(&mut s)?;
    // Q2 on each input pair leaves the output qubit alone.
    for k in 0..n as usize {
        let (lo, hi) = (2 * k, 2 * k + 1);
        s.apply_h_pair(lo, hi)?
            .apply_z(lo)?
            .apply_z(hi)?
            .apply_cz(lo, hi)?
            .apply_h_pair(lo, hi)?;
    }
    Ok(s)
}

/// Folded state tensored with `|->`, for comparison with the faithful run.
pub fn folded_with_output(folded: &StateVector) -> Result<StateVector> {
    folded.tensor_high(&minus_state())
}

fn marginal_argmax(state: &StateVector, inputs: usize) -> (usize, f64) {
    let amps = state.amplitudes();
    let out = 1usize << inputs;
    let mut best = (0, 0.0);
    for x in 0..out {
        let p = amps[x] * amps[x] + amps[x | out] * amps[x | out];
        if p > best.1 || x == 0 {
            best = (x, p);
        }
    }
    best
}

/// Runs `spec` against `oracle`, which must hide the spec's pattern.
pub fn run_with_oracle(
    spec: &CircuitSpec,
    oracle: &Oracle,
    opts: RunOptions,
) -> Result<ClassificationResult> {
    let n = spec.rank;
    let before = oracle.query_count();
    let (state, (index, probability)) = if opts.faithful {
        let s = final_state_faithful(oracle, n)?;
        let m = marginal_argmax(&s, spec.input_qubits());
        (s, m)
    } else {
        let s = final_state(oracle, n)?;
        let m = s.argmax_basis();
        (s, m)
    };
    let membership = locate(oracle.pattern());
    if let Some(expected) = membership.index() {
        if expected != index {
            return Err(Error::Misclassified {
                expected,
                actual: index,
            });
        }
    }
    Ok(ClassificationResult {
        rank: n,
        index,
        bits: BitVector::from_index(index as u64, spec.input_qubits()),
        probability,
        queries_used: oracle.query_count() - before,
        membership,
        in_promise: membership != Membership::Absent && (probability - 1.0).abs() <= TOLERANCE,
        final_state: opts.keep_state.then_some(state),
    })
}

pub fn run(spec: &CircuitSpec) -> Result<ClassificationResult> {
    run_opts(spec, RunOptions::default())
}

pub fn run_opts(spec: &CircuitSpec, opts: RunOptions) -> Result<ClassificationResult> {
    let oracle = Oracle::new(spec.hidden().clone());
    run_with_oracle(spec, &oracle, opts)
}

/// Classifies a pattern of any hierarchy rank up to [`MAX_CIRCUIT_RANK`].
pub fn classify(hidden: &PatternVector) -> Result<ClassificationResult> {
    classify_opts(hidden, RunOptions::default())
}

pub fn classify_opts(hidden: &PatternVector, opts: RunOptions) -> Result<ClassificationResult> {
    let n = hidden.rank();
    if n > MAX_CIRCUIT_RANK {
        return Err(Error::RankOutOfRange {
            rank: n,
            max: MAX_CIRCUIT_RANK,
        });
    }
    run_opts(&build_circuit(n, hidden.clone())?, opts)
}

/// Classifies every member of `basis(n)` and checks that member `i` lands
/// on index `i` with probability 1.
pub fn classify_exhaustive(n: u32) -> Result<Vec<ClassificationResult>> {
    classify_exhaustive_with_limit(n, MAX_EXHAUSTIVE_RANK)
}

pub fn classify_exhaustive_with_limit(n: u32, max_rank: u32) -> Result<Vec<ClassificationResult>> {
    if n == 0 || n > max_rank.min(MAX_CIRCUIT_RANK) {
        return Err(Error::RankOutOfRange {
            rank: n,
            max: max_rank.min(MAX_CIRCUIT_RANK),
        });
    }
    let basis = patterns::basis(n)?;
    basis
        .iter()
        .enumerate()
        .map(|(i, member)| {
            let r = classify(member)?;
            if r.index != i || (r.probability - 1.0).abs() > TOLERANCE {
                return Err(Error::Misclassified {
                    expected: i,
                    actual: r.index,
                });
            }
            Ok(r)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Alice,
    Bob,
}

/// Bob's hidden function: a basis member, possibly negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BobChoice {
    pub index: usize,
    pub negated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTranscript {
    pub rank: u32,
    pub seed: u64,
    pub bob_choice: BobChoice,
    pub alice_answer: usize,
    /// Alice's verdict on negation, present only when she spent the extra query.
    pub alice_negated: Option<bool>,
    pub disambiguation_used: bool,
    pub queries: u64,
    pub winner: Player,
}

fn check_game_rank(n: u32) -> Result<()> {
    if n == 0 || n > MAX_EXHAUSTIVE_RANK {
        return Err(Error::RankOutOfRange {
            rank: n,
            max: MAX_EXHAUSTIVE_RANK,
        });
    }
    Ok(())
}

/// Bob's seeded draw: a uniform member index, negated with probability 1/2
/// when negations are allowed.
pub fn draw_choice(n: u32, seed: u64, allow_negation: bool) -> Result<BobChoice> {
    check_game_rank(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let index = rng.gen_range(0..1usize << (2 * n));
    let negated = allow_negation && rng.gen_bool(0.5);
    Ok(BobChoice { index, negated })
}

pub fn play_game(n: u32, seed: u64, allow_negation: bool) -> Result<GameTranscript> {
    let choice = draw_choice(n, seed, allow_negation)?;
    play_game_with_choice(n, seed, choice, allow_negation)
}

/// One round with Bob's choice fixed by the caller.
pub fn play_game_with_choice(
    n: u32,
    seed: u64,
    choice: BobChoice,
    allow_negation: bool,
) -> Result<GameTranscript> {
    check_game_rank(n)?;
    let member = basis_member(n, choice.index)?;
    let hidden = if choice.negated {
        patterns::negate(&member)
    } else {
        member
    };
    let oracle = Oracle::new(hidden.clone());
    let result = run_with_oracle(&build_circuit(n, hidden)?, &oracle, RunOptions::default())?;

    let alice_negated = if allow_negation {
        let candidate = basis_member(n, result.index)?;
        match oracle.disambiguate(&candidate) {
            Ok(r) => Some(r == Resolution::Negation),
            Err(Error::OutOfPromise) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let identified = result.index == choice.index
        && match alice_negated {
            Some(neg) => neg == choice.negated,
            None => !choice.negated,
        };
    Ok(GameTranscript {
        rank: n,
        seed,
        bob_choice: choice,
        alice_answer: result.index,
        alice_negated,
        disambiguation_used: allow_negation,
        queries: oracle.query_count(),
        winner: if identified {
            Player::Alice
        } else {
            Player::Bob
        },
    })
}
