//! Partition a ground set across a system of matroids, or get a deficiency
//! certificate; compute union rank constructively and by the exhaustive
//! formula.
//!
//! Run with `cargo run --example matroid_partition`.

use coopcolor::matroid::k4_edges;
use coopcolor::partition::{
    partition_ground_set, union_rank, union_rank_formula_bf, PartitionOutcome,
};
use coopcolor::{Error, Matroid};

fn main() -> Result<(), Error> {
    // two forests suffice to cover K4
    let system = vec![Matroid::graphic(4, k4_edges())?, Matroid::graphic(4, k4_edges())?];
    let target = system[0].ground().full();
    match partition_ground_set(&system, target)? {
        PartitionOutcome::Partitioned(parts) => {
            println!("K4 edges split into forests: {} and {}", parts[0], parts[1]);
        }
        PartitionOutcome::Deficient(_) => unreachable!("K4 has arboricity 2"),
    }

    // a single U(4,2) cannot absorb four elements; the certificate proves it
    let single = vec![Matroid::uniform(4, 2)?];
    match partition_ground_set(&single, single[0].ground().full())? {
        PartitionOutcome::Deficient(cert) => {
            println!(
                "U(4,2) alone fails: X = {} has rank sum {} < |X| = {}",
                cert.witness,
                cert.slot_ranks.iter().sum::<usize>(),
                cert.witness_size
            );
            assert!(cert.verify(&single)?);
        }
        PartitionOutcome::Partitioned(_) => unreachable!(),
    }

    // union rank: the augmenting engine against the min-formula oracle
    let mixed = vec![Matroid::uniform(6, 2)?, Matroid::graphic(4, k4_edges())?];
    let full = mixed[0].ground().full();
    let fast = union_rank(&mixed, full)?;
    let (slow, minimizer) = union_rank_formula_bf(&mixed, full)?;
    println!("union rank of U(6,2) + graphic(K4): {fast} (formula {slow}, minimizer {minimizer})");
    assert_eq!(fast, slow);
    Ok(())
}
