//! Exports the gate listing of a circuit, parses it back and interprets it
//! gate by gate.
//!
//! cargo run -p patternq --example circuit_text

use patternq::build_circuit;
use patternq::patterns::basis_member;
use patternq::program::parse_program;

fn main() -> patternq::Result<()> {
    let hidden = basis_member(2, 3)?;
    let listing = build_circuit(2, hidden)?.to_text();
    print!("{listing}");

    let program = parse_program(&listing)?;
    let run = program.execute()?;
    let (index, p) = run.outcome.expect("listing ends with measure");
    println!(
        "# interpreted: {} ops on {} qubits -> index {index}, p = {p:.15}",
        program.ops.len(),
        program.qubits
    );
    Ok(())
}
