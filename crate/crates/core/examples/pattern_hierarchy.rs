//! Builds the first few pattern bases and checks their structure.
//!
//! cargo run -p patternq --example pattern_hierarchy

use patternq::patterns::{basis, imbalance_closed_form, imbalance_ratio, imbalance_recurrence};

fn main() -> patternq::Result<()> {
    let p4 = basis(2)?;
    println!("rank 2 basis:");
    for (i, m) in p4.iter().enumerate() {
        println!("  {i:2}: {m}  ratio {}", imbalance_ratio(m));
    }

    for n in 1..=4 {
        let b = basis(n)?;
        let half = b.len() / 2;
        let mut pairs = 0;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                assert_eq!(b.members()[i].bits().distance(b.members()[j].bits())?, half);
                pairs += 1;
            }
        }
        println!(
            "rank {n}: {} members, {pairs} orthogonal pairs, ratio {} (recurrence {})",
            b.len(),
            imbalance_closed_form(n)?,
            imbalance_recurrence(n)?
        );
    }
    Ok(())
}
