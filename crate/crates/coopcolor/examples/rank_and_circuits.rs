//! Build matroid oracles, query independence, ranks, and fundamental
//! circuits.
//!
//! Run with `cargo run --example rank_and_circuits`.

use coopcolor::matroid::k4_edges;
use coopcolor::{Error, Matroid};

fn main() -> Result<(), Error> {
    // the graphic matroid of K4: elements are edges, independence = acyclic
    let k4 = Matroid::graphic(4, k4_edges())?;
    let g = k4.ground();

    let path = g.subset_of(&[0, 3, 5]); // (0,1), (1,2), (2,3): a path
    let triangle = g.subset_of(&[3, 4, 5]); // the triangle on vertices 1,2,3
    println!("path {path} independent: {}", k4.is_independent(path)?);
    println!("triangle {triangle} independent: {}", k4.is_independent(triangle)?);
    println!("rank of all six edges: {}", k4.rank(g.full())?);

    // adding edge 4 = (1,3) to the path closes exactly one cycle
    let circuit = k4.fundamental_circuit(path, 4)?.expect("the path plus (1,3) has a cycle");
    println!("fundamental circuit of edge 4 in {path}: {circuit}");

    // a uniform matroid: independent iff at most rank elements
    let u42 = Matroid::uniform(4, 2)?;
    println!(
        "U(4,2): {{0,1}} independent: {}, {{0,1,2}} independent: {}",
        u42.is_independent(u42.ground().subset_of(&[0, 1]))?,
        u42.is_independent(u42.ground().subset_of(&[0, 1, 2]))?,
    );

    // construction rejects loops outright
    match Matroid::graphic(2, vec![(0, 0)]) {
        Err(Error::LoopDetected { element }) => {
            println!("self-loop edge rejected: element {element} would be a loop")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
