//! Runs the circuit with an explicit output qubit prepared in |->, and
//! shows that it leaves the input register exactly as the phase oracle does.
//!
//! cargo run -p patternq --example faithful_oracle

use patternq::circuit::{final_state, final_state_faithful, folded_with_output};
use patternq::patterns::basis;
use patternq::Oracle;

fn main() -> patternq::Result<()> {
    for n in 1..=2 {
        let mut worst: f64 = 0.0;
        for m in basis(n)?.iter() {
            let faithful = final_state_faithful(&Oracle::new(m.clone()), n)?;
            let folded = final_state(&Oracle::new(m.clone()), n)?;
            worst = worst.max(faithful.max_abs_diff(&folded_with_output(&folded)?));
        }
        println!(
            "rank {n}: {} qubits faithful vs {} folded, max diff {worst:e}",
            2 * n + 1,
            2 * n
        );
    }
    Ok(())
}
