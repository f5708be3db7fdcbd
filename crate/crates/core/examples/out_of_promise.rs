//! What happens when the hidden function is outside the hierarchy: the
//! outcome is no longer certain and the result is flagged.
//!
//! cargo run -p patternq --example out_of_promise

use patternq::circuit::final_state;
use patternq::{classify, Oracle, PatternVector};

fn main() -> patternq::Result<()> {
    for text in ["1010", "0011", "0110 1001 1001 0110", "1000 1000 1000 1000"] {
        let p: PatternVector = text.parse()?;
        let r = classify(&p)?;
        let hist = final_state(&Oracle::new(p.clone()), p.rank())?.sample(4096, 7)?;
        println!(
            "{text}: argmax {} p={:.4} in_promise={} histogram {:?}",
            r.bits, r.probability, r.in_promise, hist.counts
        );
    }
    Ok(())
}
