//! Command-line front end.
//!
//! Everything lives in the library so it can be driven in-process; the
//! binary only forwards `argv` to [`run_args`] and exits with its code.
//! Exit codes: 0 success, 1 failed check, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circuit::{
    self, build_circuit, classify_opts, final_state, final_state_faithful, folded_with_output,
    play_game, post_oracle_state, RunOptions, MAX_EXHAUSTIVE_RANK,
};
use crate::classifier::{apply_classifier, classifier_matrix, q2_matrix, DenseUnitary};
use crate::error::Error;
use crate::oracle::Oracle;
use crate::patterns::{
    self, basis, basis_member, imbalance_closed_form, imbalance_ratio, imbalance_recurrence,
    negate, PatternVector,
};
use crate::simulator::TOLERANCE;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "patternq",
    version,
    about = "Single-query classifier for imbalanced Boolean functions"
)]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Output format; `--format json` is the same as `--json`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every member of the rank-R pattern basis.
    Basis {
        #[arg(long)]
        rank: u32,
    },
    /// Classify one hidden function with a single oracle query.
    Classify {
        #[command(flatten)]
        target: Target,
        /// Include the pre-measurement state.
        #[arg(long)]
        state: bool,
        /// Materialize the output qubit and use the XOR oracle.
        #[arg(long)]
        faithful: bool,
    },
    /// Run every structural and simulation check up to a rank.
    Verify {
        #[arg(long, default_value_t = 3)]
        rank_max: u32,
    },
    /// Sample measurement outcomes of the classification circuit.
    Sample {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 2048)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the gate-level circuit text for a hidden function.
    Export {
        #[command(flatten)]
        target: Target,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play one round of the hidden-function guessing game.
    Game {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        allow_negation: bool,
    },
}

/// A hidden function, given as text or as a basis coordinate.
#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Pattern vector, MSB first; spaces and underscores are ignored.
    #[arg(long, conflicts_with_all = ["rank", "index"])]
    pub pattern: Option<String>,
    #[arg(long, requires = "index")]
    pub rank: Option<u32>,
    #[arg(long, requires = "rank")]
    pub index: Option<usize>,
}

impl Target {
    fn resolve(&self) -> Result<PatternVector, CliError> {
        match (&self.pattern, self.rank, self.index) {
            (Some(p), _, _) => Ok(p.parse()?),
            (None, Some(r), Some(i)) => Ok(basis_member(r, i)?),
            _ => Err(CliError::Usage(
                "give --pattern or --rank with --index".into(),
            )),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(msg) => CliError::Failed(msg),
            Error::Misclassified { .. } => CliError::Failed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Machine-readable result of one command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub rank: Option<u32>,
    pub results: Vec<Value>,
    pub pass: bool,
    pub passed: u64,
    pub failed: u64,
    pub timing_ms: Option<f64>,
}

impl RunReport {
    fn new(command: String, rank: Option<u32>) -> Self {
        RunReport {
            command,
            rank,
            results: Vec::new(),
            pass: true,
            passed: 0,
            failed: 0,
            timing_ms: None,
        }
    }
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    run_cli(&cli, echo)
}

pub fn run_cli(cli: &Cli, echo: String) -> Output {
    let started = Instant::now();
    let json_out = cli.json || cli.format == Format::Json;
    let outcome = match &cli.command {
        Command::Basis { rank } => cmd_basis(*rank, echo),
        Command::Classify {
            target,
            state,
            faithful,
        } => cmd_classify(target, *state, *faithful, echo),
        Command::Verify { rank_max } => cmd_verify(*rank_max, echo),
        Command::Sample {
            target,
            shots,
            seed,
        } => cmd_sample(target, *shots, *seed, echo),
        Command::Export { target, out } => cmd_export(target, out.as_deref(), echo),
        Command::Game {
            rank,
            seed,
            allow_negation,
        } => cmd_game(*rank, *seed, *allow_negation, echo),
    };
    match outcome {
        Ok((mut report, text)) => {
            if cli.timing {
                report.timing_ms = Some(started.elapsed().as_secs_f64() * 1e3);
            }
            let code = if report.pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let stdout = if json_out {
                let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                s.push('\n');
                s
            } else {
                let mut t = text;
                if let Some(ms) = report.timing_ms {
                    let _ = writeln!(t, "timing_ms: {ms:.3}");
                }
                t
            };
            Output {
                stdout,
                stderr: String::new(),
                code,
            }
        }
        Err(CliError::Usage(msg)) => Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        },
        Err(CliError::Failed(msg)) => Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_CHECK_FAILED,
        },
    }
}

type CmdResult = Result<(RunReport, String), CliError>;

pub fn cmd_basis(rank: u32, echo: String) -> CmdResult {
    let b = basis(rank)?;
    let mut report = RunReport::new(echo, Some(rank));
    let mut text = String::new();
    for (i, m) in b.iter().enumerate() {
        let ratio = imbalance_ratio(m);
        let _ = writeln!(text, "{i}: {m}  ratio {ratio}");
        report
            .results
            .push(json!({ "index": i, "pattern": m.to_string(), "ratio": ratio.to_string() }));
    }
    report.passed = b.len() as u64;
    Ok((report, text))
}

pub fn cmd_classify(target: &Target, state: bool, faithful: bool, echo: String) -> CmdResult {
    let p = target.resolve()?;
    let r = classify_opts(
        &p,
        RunOptions {
            keep_state: state,
            faithful,
        },
    )?;
    let mut report = RunReport::new(echo, Some(r.rank));
    let mut text = String::new();
    let _ = writeln!(text, "pattern: {p}");
    let _ = writeln!(text, "index: {}", r.index);
    let _ = writeln!(text, "bits: {}", r.bits);
    let _ = writeln!(text, "probability: {:?}", r.probability);
    let _ = writeln!(text, "queries_used: {}", r.queries_used);
    let membership = match r.membership {
        patterns::Membership::Member(i) => format!("member {i}"),
        patterns::Membership::NegationOf(i) => format!("negation of member {i}"),
        patterns::Membership::Absent => "absent".to_string(),
    };
    let _ = writeln!(text, "membership: {membership}");
    let _ = writeln!(text, "in_promise: {}", r.in_promise);
    if !r.in_promise {
        let _ = writeln!(
            text,
            "warning: out of promise; the function is not in the rank-{} hierarchy and the outcome is not deterministic",
            r.rank
        );
    }
    if let Some(s) = &r.final_state {
        let amps: Vec<String> = s.amplitudes().iter().map(|a| a.to_string()).collect();
        let _ = writeln!(text, "final_state: [{}]", amps.join(", "));
    }
    let mut value = serde_json::to_value(&r).expect("result serializes");
    value["pattern"] = json!(p.to_string());
    report.results.push(value);
    report.passed = 1;
    Ok((report, text))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub rank: Option<u32>,
    pub check: String,
    pub passed: u64,
    pub total: u64,
}

impl CheckOutcome {
    fn new(rank: Option<u32>, check: &str) -> Self {
        CheckOutcome {
            rank,
            check: check.to_string(),
            passed: 0,
            total: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.total += 1;
        if ok {
            self.passed += 1;
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn check_classifier_algebra(n: u32, c: &mut CheckOutcome) {
    let Ok(dense) = classifier_matrix(n) else {
        c.record(false);
        return;
    };
    c.record(dense.is_orthogonal(TOLERANCE));
    c.record(
        dense
            .matmul(&dense)
            .max_abs_diff(&DenseUnitary::identity(dense.dim()))
            <= TOLERANCE,
    );
    let gate = DenseUnitary::from_columns(2 * n as usize, |s| apply_classifier(s, n));
    c.record(matches!(gate, Ok(g) if g.max_abs_diff(&dense) <= TOLERANCE));
    if n == 1 {
        c.record(dense == q2_matrix());
    }
}

/// Runs every named check for ranks `1..=rank_max`.
pub fn verify_checks(rank_max: u32) -> Result<Vec<CheckOutcome>, Error> {
    if rank_max == 0 || rank_max > MAX_EXHAUSTIVE_RANK {
        return Err(Error::RankOutOfRange {
            rank: rank_max,
            max: MAX_EXHAUSTIVE_RANK,
        });
    }
    let mut out = Vec::new();

    let mut rec = CheckOutcome::new(None, "recurrence closed form");
    for n in 1..=16 {
        let closed = imbalance_closed_form(n)?;
        rec.record(imbalance_recurrence(n)? == closed && closed < patterns::Ratio::new(1, 2));
    }
    out.push(rec);

    for n in 1..=rank_max {
        let b = basis(n)?;
        let half = b.len() / 2;
        let r = Some(n);

        let mut ortho = CheckOutcome::new(r, "orthogonality pairs");
        let mut distinct = CheckOutcome::new(r, "distinct members");
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let d = b.members()[i].bits().distance(b.members()[j].bits())?;
                ortho.record(d == half);
                distinct.record(d != 0);
            }
        }

        let closed = imbalance_closed_form(n)?;
        let mut ratios = CheckOutcome::new(r, "imbalance ratios");
        for m in b.iter() {
            ratios.record(imbalance_ratio(m) == closed && m.count_ones() * 2 < m.len());
        }

        let mut exhaustive = CheckOutcome::new(r, "classify_exhaustive");
        let mut negation = CheckOutcome::new(r, "negation symmetry");
        let mut faithful = CheckOutcome::new(r, "faithful equivalence");
        let mut queries = CheckOutcome::new(r, "single query");
        let mut post_states = Vec::with_capacity(b.len());
        for (i, m) in b.iter().enumerate() {
            let o = Oracle::new(m.clone());
            let s = final_state(&o, n)?;
            let (idx, p) = s.argmax_basis();
            exhaustive.record(
                idx == i
                    && (p - 1.0).abs() <= TOLERANCE
                    && s.amplitudes()[i] == 1.0
                    && s.is_dyadic(0),
            );
            queries.record(o.query_count() == 1);

            let neg = final_state(&Oracle::new(negate(m)), n)?;
            negation.record(neg.argmax_basis().0 == idx && neg == s.scaled(-1.0));

            let fs = final_state_faithful(&Oracle::new(m.clone()), n)?;
            faithful.record(fs.approx_eq(&folded_with_output(&s)?, TOLERANCE));

            post_states.push(post_oracle_state(&Oracle::new(m.clone()), n)?);
        }

        let mut hilbert = CheckOutcome::new(r, "hilbert orthogonality");
        for i in 0..post_states.len() {
            for j in i + 1..post_states.len() {
                hilbert.record(post_states[i].inner_product(&post_states[j])?.abs() <= TOLERANCE);
            }
        }

        let mut algebra = CheckOutcome::new(r, "classifier algebra");
        if n <= 3 {
            check_classifier_algebra(n, &mut algebra);
        } else {
            // Dense cross-checks stop at rank 3; the gate path must still be
            // self-inverse.
            for psi in &post_states {
                let mut back = psi.clone();
                apply_classifier(&mut back, n)?;
                apply_classifier(&mut back, n)?;
                algebra.record(back.approx_eq(psi, TOLERANCE));
            }
        }

        out.extend([
            ortho, distinct, ratios, exhaustive, queries, negation, faithful, hilbert, algebra,
        ]);
    }
    Ok(out)
}

pub fn cmd_verify(rank_max: u32, echo: String) -> CmdResult {
    let checks = verify_checks(rank_max)?;
    let mut report = RunReport::new(echo, Some(rank_max));
    let mut text = String::new();
    for c in &checks {
        let status = if c.ok() { "ok" } else { "FAIL" };
        match c.rank {
            Some(n) => {
                let _ = writeln!(
                    text,
                    "rank {n} {}: {}/{} {status}",
                    c.check, c.passed, c.total
                );
            }
            None => {
                let _ = writeln!(text, "{}: {}/{} {status}", c.check, c.passed, c.total);
            }
        }
        if c.ok() {
            report.passed += 1;
        } else {
            report.failed += 1;
        }
        report
            .results
            .push(serde_json::to_value(c).expect("check serializes"));
    }
    report.pass = report.failed == 0;
    let _ = writeln!(
        text,
        "verify: {} ({}/{} checks)",
        if report.pass { "PASS" } else { "FAIL" },
        report.passed,
        report.passed + report.failed
    );
    Ok((report, text))
}

pub fn cmd_sample(target: &Target, shots: u64, seed: u64, echo: String) -> CmdResult {
    let p = target.resolve()?;
    let n = p.rank();
    if n > circuit::MAX_CIRCUIT_RANK {
        return Err(Error::RankOutOfRange {
            rank: n,
            max: circuit::MAX_CIRCUIT_RANK,
        }
        .into());
    }
    let s = final_state(&Oracle::new(p.clone()), n)?;
    let hist = s.sample(shots, seed)?;
    let mut report = RunReport::new(echo, Some(n));
    let mut text = String::new();
    for (outcome, count) in &hist.counts {
        let _ = writeln!(text, "{outcome}: {count}");
        report
            .results
            .push(json!({ "outcome": outcome, "count": count }));
    }
    let _ = writeln!(text, "shots: {} seed: {seed}", hist.shots);
    report.passed = hist.shots;
    Ok((report, text))
}

pub fn cmd_export(target: &Target, out: Option<&std::path::Path>, echo: String) -> CmdResult {
    let p = target.resolve()?;
    let spec = build_circuit(p.rank(), p)?;
    let listing = spec.to_text();
    let mut report = RunReport::new(echo, Some(spec.rank()));
    let lines = listing.lines().count();
    let text = match out {
        Some(path) => {
            std::fs::write(path, &listing)
                .map_err(|e| CliError::Failed(format!("cannot write {}: {e}", path.display())))?;
            report
                .results
                .push(json!({ "path": path.display().to_string(), "lines": lines }));
            format!("wrote {lines} lines to {}\n", path.display())
        }
        None => {
            report
                .results
                .push(json!({ "circuit": listing, "lines": lines }));
            listing
        }
    };
    report.passed = 1;
    Ok((report, text))
}

pub fn cmd_game(rank: u32, seed: u64, allow_negation: bool, echo: String) -> CmdResult {
    let t = play_game(rank, seed, allow_negation)?;
    let mut report = RunReport::new(echo, Some(rank));
    let mut text = String::new();
    let _ = writeln!(
        text,
        "bob: index {} negated {}",
        t.bob_choice.index, t.bob_choice.negated
    );
    let _ = writeln!(text, "alice: index {}", t.alice_answer);
    if let Some(neg) = t.alice_negated {
        let _ = writeln!(text, "alice negated: {neg}");
    }
    let _ = writeln!(text, "disambiguation_used: {}", t.disambiguation_used);
    let _ = writeln!(text, "queries: {}", t.queries);
    let _ = writeln!(
        text,
        "winner: {}",
        match t.winner {
            circuit::Player::Alice => "alice",
            circuit::Player::Bob => "bob",
        }
    );
    report
        .results
        .push(serde_json::to_value(&t).expect("transcript serializes"));
    report.passed = 1;
    Ok((report, text))
}
