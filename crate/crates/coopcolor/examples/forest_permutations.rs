//! For a graph of arboricity 2 and any permutation π of its edges, there is
//! a forest F such that π(E ∖ F) is also a forest. Generalizes to k − 1
//! permutations for arboricity k.
//!
//! Run with `cargo run --example forest_permutations`.

use coopcolor::coloring::forest_permutation_decomposition;
use coopcolor::matroid::k4_edges;
use coopcolor::{is_forest, Error, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Error> {
    let edges = k4_edges();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for trial in 0..5 {
        let p = Permutation::random(edges.len(), &mut rng);
        let classes = forest_permutation_decomposition(4, &edges, std::slice::from_ref(&p))?;
        let (f, rest) = (classes[0], classes[1]);
        let image = p.image(rest);
        println!(
            "π = {:?}: F = {f}, π(E∖F) = {image} (both forests: {})",
            p.as_slice(),
            is_forest(4, &edges, f.iter()) && is_forest(4, &edges, image.iter())
        );
        assert!(is_forest(4, &edges, f.iter()));
        assert!(is_forest(4, &edges, image.iter()));
        let _ = trial;
    }

    // three permutations on a denser multigraph of arboricity 4
    let doubled: Vec<(usize, usize)> =
        k4_edges().into_iter().flat_map(|e| [e, e]).collect();
    let perms: Vec<Permutation> =
        (0..3).map(|_| Permutation::random(doubled.len(), &mut rng)).collect();
    let classes = forest_permutation_decomposition(4, &doubled, &perms)?;
    println!("doubled K4 split into {} classes, sizes {:?}", classes.len(), classes
        .iter()
        .map(|c| c.len())
        .collect::<Vec<_>>());
    Ok(())
}
