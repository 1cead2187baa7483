//! A zoo of small named matroids covering every built-in constructor.
//!
//! The verification suites and the runnable examples draw their instances
//! from here, so the same fixtures exercise uniform, graphic, partition,
//! linear, restriction, and pullback oracles.

use crate::matroid::{k4_edges, Matroid};
use crate::set::{GroundSet, Permutation};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub matroid: Matroid,
}

fn entry(name: &'static str, matroid: Matroid) -> CorpusEntry {
    CorpusEntry { name, matroid }
}

fn cycle_edges(len: usize) -> Vec<(usize, usize)> {
    (0..len).map(|i| (i, (i + 1) % len)).collect()
}

fn path_edges(len: usize) -> Vec<(usize, usize)> {
    (0..len).map(|i| (i, i + 1)).collect()
}

fn star_edges(leaves: usize) -> Vec<(usize, usize)> {
    (1..=leaves).map(|v| (0, v)).collect()
}

fn complete_edges(vertices: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in u + 1..vertices {
            edges.push((u, v));
        }
    }
    edges
}

/// All nonzero vectors of GF(2)^3: the Fano plane.
fn fano() -> Matroid {
    let cols = (1u64..8).map(|v| vec![v & 1, v >> 1 & 1, v >> 2 & 1]).collect();
    Matroid::linear(2, cols).expect("Fano columns are loop-free")
}

/// Every entry in the corpus; grounds range from 1 to 10 elements.
pub fn all() -> Vec<CorpusEntry> {
    let k4 = Matroid::graphic(4, k4_edges()).expect("K4 is loop-free");
    let b = |m: Result<Matroid, crate::error::Error>| m.expect("corpus entry is well-formed");
    let mut entries = vec![
        // uniform
        entry("u_1_1", b(Matroid::uniform(1, 1))),
        entry("u_2_1", b(Matroid::uniform(2, 1))),
        entry("free_2", b(Matroid::free(2))),
        entry("u_3_1", b(Matroid::uniform(3, 1))),
        entry("u_3_2", b(Matroid::uniform(3, 2))),
        entry("free_3", b(Matroid::free(3))),
        entry("u_4_1", b(Matroid::uniform(4, 1))),
        entry("u_4_2", b(Matroid::uniform(4, 2))),
        entry("free_4", b(Matroid::free(4))),
        entry("u_5_2", b(Matroid::uniform(5, 2))),
        entry("u_5_3", b(Matroid::uniform(5, 3))),
        entry("free_5", b(Matroid::free(5))),
        entry("u_6_2", b(Matroid::uniform(6, 2))),
        entry("u_6_3", b(Matroid::uniform(6, 3))),
        entry("u_7_3", b(Matroid::uniform(7, 3))),
        entry("u_10_4", b(Matroid::uniform(10, 4))),
        // graphic, at most 6 vertices
        entry("parallel_pair", b(Matroid::graphic(2, vec![(0, 1), (0, 1)]))),
        entry("theta_3", b(Matroid::graphic(2, vec![(0, 1), (0, 1), (0, 1)]))),
        entry("path_3e", b(Matroid::graphic(4, path_edges(3)))),
        entry("star_4", b(Matroid::graphic(5, star_edges(4)))),
        entry("star_5", b(Matroid::graphic(6, star_edges(5)))),
        entry("c3", b(Matroid::graphic(3, cycle_edges(3)))),
        entry("c4", b(Matroid::graphic(4, cycle_edges(4)))),
        entry("c5", b(Matroid::graphic(5, cycle_edges(5)))),
        entry("c6", b(Matroid::graphic(6, cycle_edges(6)))),
        entry("k4", k4.clone()),
        entry(
            "k4_minus_edge",
            b(Matroid::graphic(4, k4_edges().into_iter().take(5).collect())),
        ),
        entry("doubled_c3", {
            let mut edges = cycle_edges(3);
            edges.extend(cycle_edges(3));
            b(Matroid::graphic(3, edges))
        }),
        entry("bowtie", b(Matroid::graphic(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))),
        entry("k5", b(Matroid::graphic(5, complete_edges(5)))),
        entry("k33", {
            let mut edges = Vec::new();
            for u in 0..3 {
                for v in 3..6 {
                    edges.push((u, v));
                }
            }
            b(Matroid::graphic(6, edges))
        }),
        // partition
        entry("blocks_2x2_cap1", b(Matroid::partition(vec![vec![0, 1], vec![2, 3]], vec![1, 1]))),
        entry("blocks_3_2_mixed", b(Matroid::partition(vec![vec![0, 1, 2], vec![3, 4]], vec![1, 2]))),
        entry("blocks_5_cap2", b(Matroid::partition(vec![vec![0, 1, 2, 3, 4]], vec![2]))),
        entry("blocks_singletons", b(Matroid::partition(vec![vec![0], vec![1], vec![2], vec![3]], vec![1, 1, 1, 1]))),
        entry("blocks_3_cap1", b(Matroid::partition(vec![vec![0, 1, 2]], vec![1]))),
        // linear over GF(2) and GF(3)
        entry("fano", fano()),
        entry("gf2_line_4", b(Matroid::linear(2, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 0]]))),
        entry("gf3_4points", b(Matroid::linear(3, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]))),
        entry("gf3_rank3", b(Matroid::linear(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1], vec![1, 2, 0]]))),
        entry("gf2_k5_columns", {
            // edge incidence columns of K5 over GF(2): a linear twin of k5
            let cols = complete_edges(5)
                .into_iter()
                .map(|(u, v)| (0..5).map(|r| u64::from(r == u || r == v)).collect())
                .collect();
            b(Matroid::linear(2, cols))
        }),
    ];
    // derived constructors over the fixtures above
    let g6 = GroundSet::new(6);
    entries.push(entry("k4_restricted_path", k4.restrict(g6.subset_of(&[0, 3, 5]))));
    entries.push(entry("k4_restricted_4", k4.restrict(g6.subset_of(&[0, 1, 2, 3]))));
    entries.push(entry(
        "k4_shifted",
        k4.pullback(Permutation::new(vec![1, 2, 3, 4, 5, 0]).expect("bijection"))
            .expect("pullback of a loopless matroid"),
    ));
    entries.push(entry(
        "fano_reversed",
        fano()
            .pullback(Permutation::new(vec![6, 5, 4, 3, 2, 1, 0]).expect("bijection"))
            .expect("pullback of a loopless matroid"),
    ));
    entries
}

/// Corpus entries on exactly `n` elements whose whole ground set is usable
/// (restrictions excluded); suitable members for shared-ground systems.
pub fn systems_pool(n: usize) -> Vec<CorpusEntry> {
    all()
        .into_iter()
        .filter(|e| {
            e.matroid.ground().len() == n && e.matroid.admissible() == e.matroid.ground().full()
        })
        .collect()
}
