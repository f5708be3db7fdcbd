//! Classifies one rank-2 function and samples the measurement 2048 times.
//!
//! cargo run -p patternq --example classify_f4 -- "1000 1000 1000 0111"

use patternq::circuit::final_state;
use patternq::{classify, Oracle, PatternVector};

fn main() -> patternq::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1000 1000 1000 0111".into());
    let hidden: PatternVector = text.parse()?;
    let r = classify(&hidden)?;
    println!("hidden   {hidden}");
    println!("index    {} (bits {})", r.index, r.bits);
    println!("p        {}", r.probability);
    println!("queries  {}", r.queries_used);
    println!("member   {:?}", r.membership);

    let state = final_state(&Oracle::new(hidden.clone()), hidden.rank())?;
    let hist = state.sample(2048, 0)?;
    for (outcome, count) in &hist.counts {
        println!("{outcome}: {count}");
    }
    Ok(())
}
