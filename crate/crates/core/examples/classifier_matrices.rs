//! Prints the dense rank-1 and rank-2 classifiers and compares them with
//! the gate-level construction.
//!
//! cargo run -p patternq --example classifier_matrices

use patternq::classifier::{apply_classifier, classifier_matrix, DenseUnitary};
use patternq::simulator::TOLERANCE;

fn print_matrix(m: &DenseUnitary) {
    for r in 0..m.dim() {
        let row: Vec<String> = m.row(r).iter().map(|x| format!("{x:>5}")).collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() -> patternq::Result<()> {
    for n in 1..=2 {
        let dense = classifier_matrix(n)?;
        println!("rank {n} classifier ({0}x{0}):", dense.dim());
        print_matrix(&dense);
    }
    for n in 1..=3u32 {
        let dense = classifier_matrix(n)?;
        let gates = DenseUnitary::from_columns(2 * n as usize, |s| apply_classifier(s, n))?;
        println!(
            "rank {n}: gate vs dense max diff {:e}, orthogonal {}",
            gates.max_abs_diff(&dense),
            dense.is_orthogonal(TOLERANCE)
        );
    }
    Ok(())
}
