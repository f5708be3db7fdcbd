//! Parser and interpreter for the circuit text format.
//!
//! One operation per line: `h qI`, `z qI`, `cz qI qJ`, `oracle <bits>` (MSB
//! first) or `measure`. `#` starts a comment. Qubit indices are
//! little-endian, so `q0` is the least significant bit of a basis index.

use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::patterns::PatternVector;
use crate::simulator::{Gate, StateVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Gate(Gate),
    Oracle(PatternVector),
    Measure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub qubits: usize,
    pub ops: Vec<Op>,
}

/// Result of interpreting a program from `|0...0>`.
#[derive(Clone, Debug, PartialEq)]
pub struct Execution {
    pub state: StateVector,
    pub queries: u64,
    /// Argmax outcome, if the program measures.
    pub outcome: Option<(usize, f64)>,
}

fn parse_qubit(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("line {line}: missing qubit")))?;
    tok.strip_prefix('q')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("line {line}: bad qubit {tok:?}")))
}

pub fn parse_program(text: &str) -> Result<Program> {
    let mut ops = Vec::new();
    let mut qubits = 0usize;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = no + 1;
        let mut toks = line.split_whitespace();
        let op = match toks.next() {
            Some("h") => Op::Gate(Gate::H(parse_qubit(toks.next(), lineno)?)),
            Some("z") => Op::Gate(Gate::Z(parse_qubit(toks.next(), lineno)?)),
            Some("cz") => {
                let a = parse_qubit(toks.next(), lineno)?;
                let b = parse_qubit(toks.next(), lineno)?;
                Op::Gate(Gate::Cz(a, b))
            }
            Some("oracle") => {
                let bits = toks
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {lineno}: missing pattern")))?;
                Op::Oracle(bits.parse()?)
            }
            Some("measure") => Op::Measure,
            Some(other) => {
                return Err(Error::Parse(format!("line {lineno}: unknown op {other:?}")))
            }
            None => unreachable!(),
        };
        if toks.next().is_some() {
            return Err(Error::Parse(format!("line {lineno}: trailing tokens")));
        }
        qubits = qubits.max(match &op {
            Op::Gate(Gate::H(q)) | Op::Gate(Gate::Z(q)) => q + 1,
            Op::Gate(Gate::Cz(a, b)) => a.max(b) + 1,
            Op::Oracle(p) => p.arity() as usize,
            Op::Measure => 0,
        });
        ops.push(op);
    }
    if qubits == 0 {
        return Err(Error::Parse("program touches no qubits".into()));
    }
    Ok(Program { qubits, ops })
}

impl Program {
    /// Runs every operation literally, one single-qubit gate at a time; the
    /// oracle is the phase oracle on the input register.
    pub fn execute(&self) -> Result<Execution> {
        let mut state = StateVector::zero_state(self.qubits)?;
        let mut queries = 0;
        let mut outcome = None;
        for op in &self.ops {
            match op {
                Op::Gate(g) => {
                    state.apply_gate(*g)?;
                }
                Op::Oracle(p) => {
                    let o = Oracle::new(p.clone());
                    o.apply_phase_oracle(&mut state)?;
                    queries += o.query_count();
                }
                Op::Measure => outcome = Some(state.argmax_basis()),
            }
        }
        Ok(Execution {
            state,
            queries,
            outcome,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let p = parse_program("# hi\n\nh q0 # trailing\ncz q0 q1\nmeasure\n").unwrap();
        assert_eq!(p.qubits, 2);
        assert_eq!(
            p.ops,
            vec![Op::Gate(Gate::H(0)), Op::Gate(Gate::Cz(0, 1)), Op::Measure]
        );
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_program("x q0").is_err());
        assert!(parse_program("h 0").is_err());
        assert!(parse_program("cz q0").is_err());
        assert!(parse_program("h q0 q1").is_err());
        assert!(parse_program("oracle 010").is_err());
        assert!(parse_program("measure").is_err());
    }

    #[test]
    fn executes_rank_one_listing() {
        let text =
            "h q0\nh q1\noracle 0100\nh q0\nh q1\nz q0\nz q1\ncz q0 q1\nh q0\nh q1\nmeasure\n";
        let run = parse_program(text).unwrap().execute().unwrap();
        let (idx, p) = run.outcome.unwrap();
        assert_eq!(idx, 2);
        assert!((p - 1.0).abs() < 1e-12);
        assert_eq!(run.queries, 1);
    }
}
