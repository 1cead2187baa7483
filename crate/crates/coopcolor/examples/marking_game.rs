//! The marking game (players alternate picking an element and a legal
//! color), plus the 2-covering construction behind its solvability: 2k
//! matroids, each k-colorable, admit sets A_i independent in M_i covering
//! every element exactly twice.
//!
//! Run with `cargo run --example marking_game`.

use coopcolor::games::{solve, two_covering, MarkingGame, Player};
use coopcolor::matroid::k4_edges;
use coopcolor::{Error, Matroid};

fn main() -> Result<(), Error> {
    // four copies of graphic(K4): a 2-covering from two cooperative colorings
    let system = vec![Matroid::graphic(4, k4_edges())?; 4];
    let parts = two_covering(&system)?;
    for (i, part) in parts.iter().enumerate() {
        println!("A_{} = {part}", i + 1);
    }
    for e in 0..6 {
        let coverage = parts.iter().filter(|p| p.contains(e)).count();
        assert_eq!(coverage, 2, "element {e}");
    }
    println!("every edge of K4 is covered exactly twice");

    // the game itself at desk scale, both choices of first player
    let small = vec![Matroid::uniform(4, 2)?, Matroid::uniform(4, 2)?];
    for first in [Player::Ann, Player::Ben] {
        let outcome = solve(&MarkingGame::new(&small, first)?);
        println!(
            "marking game on two U(4,2), {first} first: winner {} ({} states)",
            outcome.winner, outcome.explored
        );
    }
    Ok(())
}
