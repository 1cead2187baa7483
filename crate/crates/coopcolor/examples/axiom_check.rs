//! Exhaustively verify the matroid axioms for small oracles, and watch the
//! checker catch a broken independence predicate.
//!
//! Run with `cargo run --example axiom_check`.

use coopcolor::axioms::{check_independence_axioms, AxiomViolation};
use coopcolor::{corpus, Error, GroundSet};

fn main() -> Result<(), Error> {
    for entry in corpus::all() {
        match entry.matroid.verify_axioms()? {
            None => println!("{:<22} ok", entry.name),
            Some(v) => println!("{:<22} VIOLATION: {v}", entry.name),
        }
    }

    // a predicate that is not a matroid: "independent iff size != 2"
    let g = GroundSet::new(3);
    let verdict = check_independence_axioms(g, g.full(), |s| s.len() != 2)?;
    match verdict {
        Some(AxiomViolation::Heredity { set, subset }) => {
            println!("broken predicate caught: {set} is independent but its subset {subset} is not")
        }
        other => println!("unexpected verdict: {other:?}"),
    }
    Ok(())
}
