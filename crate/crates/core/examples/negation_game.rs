//! A few rounds of the guessing game. Bob hides a basis function (negated
//! or not); Alice classifies it with one query and, when negations are in
//! play, spends a second classical query to resolve the sign.
//!
//! cargo run -p patternq --example negation_game

use patternq::circuit::{play_game, Player};

fn main() -> patternq::Result<()> {
    for allow_negation in [false, true] {
        println!("allow_negation = {allow_negation}");
        let mut wins = 0;
        for seed in 0..8 {
            let t = play_game(2, seed, allow_negation)?;
            println!(
                "  seed {seed}: bob {:2}{} alice {:2}{} queries {} winner {:?}",
                t.bob_choice.index,
                if t.bob_choice.negated { "'" } else { " " },
                t.alice_answer,
                match t.alice_negated {
                    Some(true) => "'",
                    _ => " ",
                },
                t.queries,
                t.winner
            );
            wins += usize::from(t.winner == Player::Alice);
        }
        println!("  alice won {wins}/8");
    }
    Ok(())
}
