//! The painting game: in round i Ben offers a set of uncolored elements
//! (each element can be offered at most k times), and Ann colors an
//! independent-in-M_i subset of the offer with color i. Both win-condition
//! readings are implemented.
//!
//! Run with `cargo run --example painting_game`.

use coopcolor::games::{solve, PaintingGame, PaintingRules, Player};
use coopcolor::{Error, Matroid};

fn main() -> Result<(), Error> {
    let system = vec![Matroid::uniform(2, 1)?, Matroid::uniform(2, 1)?];

    // default rules: Ben wins only by exhausting an element's offers while
    // it is uncolored — here Ann always keeps up
    let game = PaintingGame::new(&system, 2, PaintingRules::NoDeadElement)?;
    let outcome = solve(&game);
    println!(
        "no-dead-element rules: winner {} ({} states explored)",
        outcome.winner, outcome.explored
    );
    assert_eq!(outcome.winner, Player::Ann);

    // the literal "everything must be colored" reading is degenerate: Ben
    // picks the empty set forever and nothing can ever be colored
    let strict = PaintingGame::new(&system, 2, PaintingRules::StrictAllColored)?;
    let outcome = solve(&strict);
    println!("strict-all-colored rules: winner {}", outcome.winner);
    assert_eq!(outcome.winner, Player::Ben);

    // single-matroid systems are always Ann wins under the default rules
    for n in 1..=3usize {
        let m = Matroid::uniform(n, 1)?;
        let copies = vec![m; n];
        let game = PaintingGame::new(&copies, n, PaintingRules::NoDeadElement)?;
        let outcome = solve(&game);
        println!("{n} copies of U({n},1), budget {n}: winner {}", outcome.winner);
        assert_eq!(outcome.winner, Player::Ann);
    }
    Ok(())
}
