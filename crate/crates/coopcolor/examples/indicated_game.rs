//! The indicated game: Ann points at an uncolored element, Ben must give it
//! a legal color. Solved exactly by memoized minimax.
//!
//! Run with `cargo run --example indicated_game`.

use coopcolor::games::{replay, solve, IndicatedGame, Player};
use coopcolor::{Error, Matroid};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Error> {
    // two 2-colorable matroids: Ann has a winning strategy
    let system = vec![Matroid::uniform(4, 2)?, Matroid::uniform(4, 2)?];
    let game = IndicatedGame::new(&system)?;
    let outcome = solve(&game);
    println!(
        "two U(4,2), two colors: winner {} after exploring {} states",
        outcome.winner, outcome.explored
    );
    assert_eq!(outcome.winner, Player::Ann);

    // following the stored strategy beats a random opponent every time
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let wins = (0..50).filter(|_| replay(&game, &outcome, &mut rng) == outcome.winner).count();
    println!("strategy replay: {wins}/50 playouts reach the declared winner");

    // one color too few and Ben punishes the second parallel element
    let short = vec![Matroid::uniform(2, 1)?];
    let outcome = solve(&IndicatedGame::new(&short)?);
    println!("single U(2,1), one color: winner {}", outcome.winner);
    assert_eq!(outcome.winner, Player::Ben);
    Ok(())
}
