//! The four one-hot functions on two bits, step by step: truth table, state
//! after the oracle, state after the classifier.
//!
//! cargo run -p patternq --example f2_walkthrough

use patternq::circuit::{final_state, post_oracle_state};
use patternq::patterns::{base_basis, function_of_pattern, negate};
use patternq::Oracle;

fn main() -> patternq::Result<()> {
    for (i, p) in base_basis().iter().enumerate() {
        let t = function_of_pattern(p);
        let psi2 = post_oracle_state(&Oracle::new(p.clone()), 1)?;
        let out = final_state(&Oracle::new(p.clone()), 1)?;
        println!("f{i}: pattern {p}, true on {:?}", t.support());
        println!("    after oracle     {:?}", psi2.amplitudes());
        println!("    after classifier {:?}", out.amplitudes());

        let g = negate(p);
        let g_out = final_state(&Oracle::new(g.clone()), 1)?;
        println!(
            "g{i}: pattern {g}, after classifier {:?}",
            g_out.amplitudes()
        );
    }
    Ok(())
}
