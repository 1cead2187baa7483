//! List coloring a system of matroids: every element gets a color from its
//! own list, and class i stays independent in matroid i.
//!
//! Run with `cargo run --example list_coloring`.

use coopcolor::coloring::{coop_list_color, ListAssignment};
use coopcolor::exhaustive::coop_colorable_bf;
use coopcolor::matroid::k4_edges;
use coopcolor::{Error, Matroid};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Error> {
    // three copies of graphic(K4); every edge gets a random 2-list from {1,2,3}
    let system = vec![Matroid::graphic(4, k4_edges())?; 3];
    let ground = system[0].ground();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let lists: Vec<Vec<usize>> = (0..ground.len())
        .map(|_| {
            let mut colors = [1, 2, 3];
            colors.shuffle(&mut rng);
            let mut pair = vec![colors[0], colors[1]];
            pair.sort_unstable();
            pair
        })
        .collect();
    println!("lists: {lists:?}");
    let lists = ListAssignment::new(ground, 3, lists)?;

    let coloring = coop_list_color(&system, &lists)?;
    println!("coloring: {:?}", coloring.to_map());
    assert!(coloring.respects_lists(&lists));
    assert!(coloring.classes_independent(&system));
    for color in 1..=3 {
        println!("  class {color}: {}", coloring.class(color));
    }

    // the naive oracle agrees that a coloring exists
    let bf = coop_colorable_bf(&system, &lists)?;
    println!("exhaustive oracle found a coloring too: {}", bf.is_some());

    // an infeasible instance yields a certificate instead
    let single = vec![Matroid::uniform(2, 1)?];
    let ones = ListAssignment::new(single[0].ground(), 1, vec![vec![1], vec![1]])?;
    match coop_list_color(&single, &ones) {
        Err(Error::Infeasible(cert)) => {
            println!(
                "two parallel elements on one color list: impossible, X = {}",
                cert.witness
            );
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
