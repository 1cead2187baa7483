//! Matroid partitioning via augmenting paths in the exchange digraph, plus
//! the union rank computed two independent ways.
//!
//! Given matroids `M_1, …, M_t` sharing one id space (each usable on its
//! [`admissible`](crate::matroid::Matroid::admissible) set `E_i`), the
//! partitioner either splits a target set into parts `A_i`, each independent
//! in `M_i`, or produces a [`DeficiencyCertificate`]: a set `X` with
//! `Σ_i r_i(X ∩ E_i) < |X|`, which by the matroid union theorem proves that
//! no such partition exists.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Limit on `|A|` for the exhaustive union-rank formula.
pub const UNION_FORMULA_MAX: usize = 20;

/// Proof that a set cannot be partitioned: the slot ranks of `witness` sum
/// below its size.
#[derive(Clone, Debug, Serialize)]
pub struct DeficiencyCertificate {
    /// The witness set `X`.
    pub witness: Subset,
    /// `r_i(X ∩ E_i)` for each slot matroid.
    pub slot_ranks: Vec<usize>,
    pub witness_size: usize,
    /// `|X| − Σ_i r_i(X ∩ E_i)`, always positive.
    pub deficiency: usize,
}

impl DeficiencyCertificate {
    fn build(matroids: &[Matroid], witness: Subset) -> Result<DeficiencyCertificate, Error> {
        let mut slot_ranks = Vec::with_capacity(matroids.len());
        for m in matroids {
            slot_ranks.push(m.rank(witness.intersect(m.admissible()))?);
        }
        let total: usize = slot_ranks.iter().sum();
        let witness_size = witness.len();
        debug_assert!(total < witness_size, "certificate is not deficient");
        Ok(DeficiencyCertificate {
            witness,
            slot_ranks,
            witness_size,
            deficiency: witness_size.saturating_sub(total),
        })
    }

    /// Re-checks the inequality through fresh oracle calls.
    pub fn verify(&self, matroids: &[Matroid]) -> Result<bool, Error> {
        if matroids.len() != self.slot_ranks.len() {
            return Ok(false);
        }
        let mut total = 0usize;
        for (m, &claimed) in matroids.iter().zip(&self.slot_ranks) {
            let r = m.rank(self.witness.intersect(m.admissible()))?;
            if r != claimed {
                return Ok(false);
            }
            total += r;
        }
        Ok(total < self.witness.len())
    }
}

/// Result of one augmentation attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AugmentResult {
    /// One more element covered; all invariants preserved.
    Augmented,
    /// No augmenting path; carries the set reached by the failed search,
    /// which is already a valid deficiency witness. The state is unchanged.
    Blocked(Subset),
}

/// Disjoint independent parts `A_1, …, A_t` under construction.
#[derive(Clone, Debug)]
pub struct PartitionState<'a> {
    matroids: &'a [Matroid],
    ground: GroundSet,
    parts: Vec<Subset>,
    covered: Subset,
}

impl<'a> PartitionState<'a> {
    pub fn new(matroids: &'a [Matroid], ground: GroundSet) -> Result<PartitionState<'a>, Error> {
        for m in matroids {
            if m.ground() != ground {
                return Err(Error::Precondition(
                    "all matroids of a system must share one ground set".into(),
                ));
            }
        }
        Ok(PartitionState {
            matroids,
            ground,
            parts: vec![ground.empty(); matroids.len()],
            covered: ground.empty(),
        })
    }

    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn covered(&self) -> Subset {
        self.covered
    }

    /// Tries to cover one more element by a breadth-first search over the
    /// exchange digraph: a reached element `x` is placed into slot `i` when
    /// `A_i ∪ {x}` is independent; otherwise `x` has an arc to every other
    /// element of the fundamental circuit of `x` in `A_i`. Slots and
    /// elements are explored in ascending order and the first augmenting
    /// path found is applied, so outputs are deterministic.
    pub fn augment(&mut self, e: usize) -> Result<AugmentResult, Error> {
        if !self.ground.contains(e) {
            return Err(Error::Precondition(format!(
                "element {e} is outside the ground set 0..{}",
                self.ground.len()
            )));
        }
        if self.covered.contains(e) {
            return Err(Error::NotUncovered { element: e });
        }

        let mut visited = self.ground.singleton(e);
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.ground.len()];
        let mut queue = VecDeque::from([e]);

        while let Some(x) = queue.pop_front() {
            // placement: does some slot accept x directly?
            for (i, m) in self.matroids.iter().enumerate() {
                if !m.admissible().contains(x) || self.parts[i].contains(x) {
                    continue;
                }
                if m.is_independent(self.parts[i].with(x))? {
                    self.apply_path(x, i, &prev);
                    self.covered = self.covered.with(e);
                    return Ok(AugmentResult::Augmented);
                }
            }
            // otherwise follow exchange arcs through each slot's circuit
            for (i, m) in self.matroids.iter().enumerate() {
                if !m.admissible().contains(x) || self.parts[i].contains(x) {
                    continue;
                }
                let circuit = m
                    .fundamental_circuit(self.parts[i], x)?
                    .expect("A_i ∪ {x} is dependent, so the circuit exists");
                for y in circuit.without(x).iter() {
                    if !visited.contains(y) {
                        visited = visited.with(y);
                        prev[y] = Some((x, i));
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(AugmentResult::Blocked(visited))
    }

    /// Applies the swaps along the recorded path ending with `sink` placed
    /// into `slot`. Each visited element sits in the part its incoming arc
    /// points through, so every removal stays within that part.
    fn apply_path(&mut self, sink: usize, slot: usize, prev: &[Option<(usize, usize)>]) {
        self.parts[slot] = self.parts[slot].with(sink);
        let mut cur = sink;
        while let Some((parent, via)) = prev[cur] {
            self.parts[via] = self.parts[via].without(cur).with(parent);
            cur = parent;
        }
        debug_assert!(self.invariants_hold(), "augmentation broke a partition invariant");
    }

    fn invariants_hold(&self) -> bool {
        let mut seen = self.ground.empty();
        for (m, &part) in self.matroids.iter().zip(&self.parts) {
            if !part.intersect(seen).is_empty() || !part.is_subset_of(m.admissible()) {
                return false;
            }
            if !m.is_independent(part).unwrap_or(false) {
                return false;
            }
            seen = seen.union(part);
        }
        true
    }
}

/// Outcome of [`partition_ground_set`].
#[derive(Clone, Debug)]
pub enum PartitionOutcome {
    /// Parts `A_1, …, A_t` in slot order; they partition the target exactly.
    Partitioned(Vec<Subset>),
    /// No partition exists; the certificate proves it.
    Deficient(DeficiencyCertificate),
}

/// Partitions `target` into per-matroid independent parts, or proves that no
/// partition exists. Elements are inserted in ascending id order.
pub fn partition_ground_set(
    matroids: &[Matroid],
    target: Subset,
) -> Result<PartitionOutcome, Error> {
    let mut state = PartitionState::new(matroids, target.ground())?;
    for e in target.iter() {
        match state.augment(e)? {
            AugmentResult::Augmented => {}
            AugmentResult::Blocked(reached) => {
                return Ok(PartitionOutcome::Deficient(DeficiencyCertificate::build(
                    matroids, reached,
                )?))
            }
        }
    }
    Ok(PartitionOutcome::Partitioned(state.parts))
}

/// Rank of `a` in the union matroid, computed constructively: elements of
/// `a` are offered in ascending order and successful augmentations counted.
pub fn union_rank(matroids: &[Matroid], a: Subset) -> Result<usize, Error> {
    let mut state = PartitionState::new(matroids, a.ground())?;
    let mut rank = 0;
    for e in a.iter() {
        if let AugmentResult::Augmented = state.augment(e)? {
            rank += 1;
        }
    }
    Ok(rank)
}

/// Union rank by the exhaustive formula
/// `min over X ⊆ A of Σ_i r_i(X ∩ E_i) + |A ∖ X|`, together with the
/// lexicographically least minimizing `X`. Independent of the augmenting
/// engine; used as its oracle.
pub fn union_rank_formula_bf(
    matroids: &[Matroid],
    a: Subset,
) -> Result<(usize, Subset), Error> {
    if a.len() > UNION_FORMULA_MAX {
        return Err(Error::TooLarge {
            what: "union-rank formula subset",
            size: a.len() as u64,
            max: UNION_FORMULA_MAX as u64,
        });
    }
    let mut best = usize::MAX;
    let mut minimizer = a.ground().empty();
    for x in a.subsets() {
        let mut value = a.minus(x).len();
        for m in matroids {
            value += m.rank(x.intersect(m.admissible()))?;
        }
        if value < best {
            best = value;
            minimizer = x;
        }
    }
    Ok((best, minimizer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{k4_edges, Matroid};
    use crate::union_find::is_forest;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn k4() -> Matroid {
        Matroid::graphic(4, k4_edges()).unwrap()
    }

    #[test]
    fn two_forests_cover_k4() {
        let ms = vec![k4(), k4()];
        let target = ms[0].ground().full();
        match partition_ground_set(&ms, target).unwrap() {
            PartitionOutcome::Partitioned(parts) => {
                assert_eq!(parts.len(), 2);
                assert_eq!(parts[0].union(parts[1]), target);
                assert!(parts[0].intersect(parts[1]).is_empty());
                for part in &parts {
                    assert!(is_forest(4, &k4_edges(), part.iter()));
                }
            }
            PartitionOutcome::Deficient(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn single_uniform_cannot_cover() {
        let ms = vec![Matroid::uniform(4, 2).unwrap()];
        let target = ms[0].ground().full();
        match partition_ground_set(&ms, target).unwrap() {
            PartitionOutcome::Deficient(cert) => {
                assert!(cert.verify(&ms).unwrap());
                assert!(cert.deficiency > 0);
                let total: usize = cert.slot_ranks.iter().sum();
                assert!(total < cert.witness.len());
            }
            PartitionOutcome::Partitioned(p) => panic!("impossible partition {p:?}"),
        }
    }

    #[test]
    fn free_matroid_takes_everything() {
        let ms = vec![Matroid::free(5).unwrap(), Matroid::free(5).unwrap()];
        let target = ms[0].ground().full();
        match partition_ground_set(&ms, target).unwrap() {
            PartitionOutcome::Partitioned(parts) => {
                assert_eq!(parts[0], target);
                assert!(parts[1].is_empty());
            }
            PartitionOutcome::Deficient(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn augment_places_into_first_free_slot() {
        let ms = vec![Matroid::uniform(2, 1).unwrap(), Matroid::uniform(2, 1).unwrap()];
        let g = ms[0].ground();
        let mut st = PartitionState::new(&ms, g).unwrap();
        assert_eq!(st.augment(0).unwrap(), AugmentResult::Augmented);
        assert_eq!(st.parts()[0], g.singleton(0));
        assert_eq!(st.covered().len(), 1);
        assert_eq!(st.augment(1).unwrap(), AugmentResult::Augmented);
        assert_eq!(st.parts()[1], g.singleton(1));
        assert_eq!(st.covered().len(), 2);
        assert!(matches!(st.augment(1), Err(Error::NotUncovered { element: 1 })));
        assert!(matches!(st.augment(9), Err(Error::Precondition(_))));
    }

    #[test]
    fn augment_reroutes_through_exchange() {
        // one copy of U(3,2): placing 0,1 then 2 must fail with {0,1,2} reached
        let ms = vec![Matroid::uniform(3, 2).unwrap()];
        let g = ms[0].ground();
        let mut st = PartitionState::new(&ms, g).unwrap();
        st.augment(0).unwrap();
        st.augment(1).unwrap();
        let before = st.clone();
        match st.augment(2).unwrap() {
            AugmentResult::Blocked(reached) => assert_eq!(reached, g.full()),
            other => panic!("expected Blocked, got {other:?}"),
        }
        assert_eq!(st.parts(), before.parts());
        assert_eq!(st.covered(), before.covered());
    }

    #[test]
    fn union_rank_examples() {
        let two_u21 = vec![Matroid::uniform(2, 1).unwrap(), Matroid::uniform(2, 1).unwrap()];
        let g = two_u21[0].ground();
        assert_eq!(union_rank(&two_u21, g.full()).unwrap(), 2);
        let (bf, x) = union_rank_formula_bf(&two_u21, g.full()).unwrap();
        assert_eq!(bf, 2);
        assert_eq!(x, g.empty());

        let single_k4 = vec![k4()];
        let full = single_k4[0].ground().full();
        assert_eq!(union_rank(&single_k4, full).unwrap(), 3);
        assert_eq!(union_rank_formula_bf(&single_k4, full).unwrap().0, 3);

        let u42 = vec![Matroid::uniform(4, 2).unwrap()];
        let full = u42[0].ground().full();
        let (bf, x) = union_rank_formula_bf(&u42, full).unwrap();
        assert_eq!(bf, 2);
        assert_eq!(x, full);

        let empty: Vec<Matroid> = Vec::new();
        let g0 = GroundSet::new(0);
        assert_eq!(union_rank(&empty, g0.empty()).unwrap(), 0);
        assert_eq!(union_rank_formula_bf(&empty, g0.empty()).unwrap().0, 0);
    }

    #[test]
    fn union_rank_matches_formula_on_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pool = [
            Matroid::uniform(6, 2).unwrap(),
            Matroid::uniform(6, 3).unwrap(),
            Matroid::graphic(4, k4_edges()).unwrap(),
            Matroid::partition(vec![vec![0, 1, 2], vec![3, 4, 5]], vec![1, 2]).unwrap(),
            k4().restrict(GroundSet::new(6).subset_of(&[0, 1, 2, 3])),
        ];
        for _ in 0..120 {
            let t = rng.random_range(1..=4);
            let ms: Vec<Matroid> =
                (0..t).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
            let g = ms[0].ground();
            let a = Subset::from_bits(g, rng.random::<u64>() & g.full().bits());
            let fast = union_rank(&ms, a).unwrap();
            let (slow, _) = union_rank_formula_bf(&ms, a).unwrap();
            assert_eq!(fast, slow, "disagreement on {a:?}");
            let fast_full = union_rank(&ms, g.full()).unwrap();
            assert_eq!(fast_full, union_rank_formula_bf(&ms, g.full()).unwrap().0);
        }
    }

    #[test]
    fn formula_guard() {
        let ms = vec![Matroid::free(21).unwrap()];
        let g = ms[0].ground();
        assert!(matches!(
            union_rank_formula_bf(&ms, g.full()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn admissible_sets_partition_within_domains() {
        // restrict two free matroids to overlapping halves; the partition must
        // respect the domains
        let free = Matroid::free(4).unwrap();
        let g = free.ground();
        let left = free.restrict(g.subset_of(&[0, 1, 2]));
        let right = free.restrict(g.subset_of(&[2, 3]));
        let ms = vec![left, right];
        match partition_ground_set(&ms, g.full()).unwrap() {
            PartitionOutcome::Partitioned(parts) => {
                assert!(parts[0].is_subset_of(ms[0].admissible()));
                assert!(parts[1].is_subset_of(ms[1].admissible()));
                assert_eq!(parts[0].union(parts[1]), g.full());
            }
            PartitionOutcome::Deficient(c) => panic!("unexpected certificate {c:?}"),
        }

        // element 3 is admissible nowhere: certificate must appear
        let ms = vec![free.restrict(g.subset_of(&[0, 1, 2]))];
        match partition_ground_set(&ms, g.full()).unwrap() {
            PartitionOutcome::Deficient(cert) => {
                assert!(cert.verify(&ms).unwrap());
                assert!(cert.witness.contains(3));
            }
            PartitionOutcome::Partitioned(p) => panic!("impossible partition {p:?}"),
        }
    }
}
