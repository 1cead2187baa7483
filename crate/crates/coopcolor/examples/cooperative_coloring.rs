//! Cooperative coloring: k different matroids on one ground set, class i
//! independent in matroid i. Exists whenever every matroid is k-colorable.
//!
//! Run with `cargo run --example cooperative_coloring`.

use coopcolor::coloring::cooperative_color;
use coopcolor::matroid::k4_edges;
use coopcolor::{Error, Matroid, Permutation};

fn main() -> Result<(), Error> {
    // a graphic matroid and a pullback of it along a permutation of edge ids:
    // both are 2-colorable, so a cooperative coloring must exist
    let k4 = Matroid::graphic(4, k4_edges())?;
    let perm = Permutation::new(vec![5, 4, 3, 2, 1, 0])?;
    let system = vec![k4.clone(), k4.pullback(perm.clone())?];

    let coloring = cooperative_color(&system)?;
    let forest = coloring.class(1);
    let rest = coloring.class(2);
    println!("class 1 (a forest of K4):            {forest}");
    println!("class 2 (forest after applying π):   {rest} → π(class 2) = {}", perm.image(rest));
    assert!(coloring.classes_independent(&system));

    // mixed constructors work the same way
    let mixed = vec![
        Matroid::uniform(6, 3)?,
        Matroid::partition(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![2, 2])?,
    ];
    let coloring = cooperative_color(&mixed)?;
    println!(
        "uniform + partition system: class 1 = {}, class 2 = {}",
        coloring.class(1),
        coloring.class(2)
    );
    assert!(coloring.classes_independent(&mixed));
    Ok(())
}
