//! Chromatic numbers two independent ways, and k-colorability with
//! certificates.
//!
//! Run with `cargo run --example chromatic_number`.

use coopcolor::coloring::{
    chromatic_number, chromatic_number_formula_bf, is_k_colorable, KColorability,
};
use coopcolor::corpus;
use coopcolor::Error;

fn main() -> Result<(), Error> {
    for entry in corpus::all().iter().filter(|e| e.matroid.ground().len() <= 7) {
        let chi = chromatic_number(&entry.matroid)?;
        let (formula, witness) = chromatic_number_formula_bf(&entry.matroid)?;
        assert_eq!(chi, formula, "the two routes must agree");
        println!("{:<22} χ = {chi}   densest subset {witness}", entry.name);
    }

    // k-colorability answers with a witness either way
    let u42 = coopcolor::Matroid::uniform(4, 2)?;
    match is_k_colorable(&u42, 1)? {
        KColorability::NotColorable(cert) => println!(
            "U(4,2) is not 1-colorable: X = {} has rank sum {} < {}",
            cert.witness,
            cert.slot_ranks.iter().sum::<usize>(),
            cert.witness_size
        ),
        KColorability::Colorable(_) => unreachable!(),
    }
    match is_k_colorable(&u42, 2)? {
        KColorability::Colorable(c) => {
            println!("U(4,2) is 2-colorable: classes {} and {}", c.class(1), c.class(2))
        }
        KColorability::NotColorable(_) => unreachable!(),
    }
    Ok(())
}
