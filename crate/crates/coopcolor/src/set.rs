//! Ground sets, bitmask subsets, and permutations of element ids.
//!
//! Every algorithm in this crate works over a [`GroundSet`] of dense element
//! ids `0..n` and manipulates [`Subset`] values backed by a `u64` bitmask, so
//! all set algebra is exact and `len` is a popcount.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Largest supported ground set; subsets are single `u64` masks.
pub const MAX_GROUND: usize = 64;

/// A finite ground set of elements `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    /// A ground set with elements `0..n`. Panics above [`MAX_GROUND`];
    /// fallible construction paths go through [`crate::matroid::MatroidSpec`].
    pub fn new(n: usize) -> GroundSet {
        assert!(n <= MAX_GROUND, "ground set of {n} elements exceeds {MAX_GROUND}");
        GroundSet { n }
    }

    pub fn len(self) -> usize {
        self.n
    }

    pub fn is_empty(self) -> bool {
        self.n == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < self.n
    }

    pub fn empty(self) -> Subset {
        Subset { bits: 0, ground: self }
    }

    pub fn full(self) -> Subset {
        let bits = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        Subset { bits, ground: self }
    }

    pub fn singleton(self, e: usize) -> Subset {
        self.empty().with(e)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Subset from an explicit element list (duplicates are harmless).
    pub fn subset_of(self, elements: &[usize]) -> Subset {
        let mut s = self.empty();
        for &e in elements {
            s = s.with(e);
        }
        s
    }

    /// Subset from an element list, rejecting out-of-range ids.
    pub fn try_subset_of(self, elements: &[usize]) -> Result<Subset, Error> {
        for &e in elements {
            if !self.contains(e) {
                return Err(Error::Precondition(format!(
                    "element {e} is outside the ground set 0..{}",
                    self.n
                )));
            }
        }
        Ok(self.subset_of(elements))
    }
}

/// A subset of a [`GroundSet`], stored as a bitmask.
///
/// Two subsets compare by their masks first, so "lexicographically least
/// bitmask" tie-breaking is plain `<` on `Subset`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    ground: GroundSet,
}

impl Subset {
    pub fn from_bits(ground: GroundSet, bits: u64) -> Subset {
        debug_assert_eq!(bits & !ground.full().bits, 0, "bits outside the ground set");
        Subset { bits: bits & ground.full().bits, ground }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn ground(self) -> GroundSet {
        self.ground
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < self.ground.n && self.bits >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Subset {
        assert!(self.ground.contains(e), "element {e} outside ground set");
        Subset { bits: self.bits | 1 << e, ..self }
    }

    pub fn without(self, e: usize) -> Subset {
        assert!(self.ground.contains(e), "element {e} outside ground set");
        Subset { bits: self.bits & !(1 << e), ..self }
    }

    pub fn union(self, other: Subset) -> Subset {
        assert_eq!(self.ground, other.ground, "mismatched ground sets");
        Subset { bits: self.bits | other.bits, ..self }
    }

    pub fn intersect(self, other: Subset) -> Subset {
        assert_eq!(self.ground, other.ground, "mismatched ground sets");
        Subset { bits: self.bits & other.bits, ..self }
    }

    pub fn minus(self, other: Subset) -> Subset {
        assert_eq!(self.ground, other.ground, "mismatched ground sets");
        Subset { bits: self.bits & !other.bits, ..self }
    }

    pub fn complement(self) -> Subset {
        Subset { bits: self.ground.full().bits & !self.bits, ..self }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        assert_eq!(self.ground, other.ground, "mismatched ground sets");
        self.bits & !other.bits == 0
    }

    /// Elements in ascending id order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` in ascending bitmask order (`2^len` of them).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let members = self.elements();
        assert!(members.len() < 64, "too many elements to enumerate subsets");
        let ground = self.ground;
        (0u64..1u64 << members.len()).map(move |ix| {
            let mut bits = 0u64;
            for (j, &e) in members.iter().enumerate() {
                if ix >> j & 1 == 1 {
                    bits |= 1 << e;
                }
            }
            Subset { bits, ground }
        })
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl std::fmt::Display for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for e in self.iter() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

/// A bijection on the ids of a ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from `map[e] = π(e)`, rejecting non-bijections.
    pub fn new(map: Vec<usize>) -> Result<Permutation, Error> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::MalformedSpec(format!(
                    "permutation {map:?} is not a bijection on 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { map: (0..n).collect() }
    }

    /// Uniformly random permutation (Fisher–Yates via `rand`).
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        use rand::seq::SliceRandom;
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(rng);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, e: usize) -> usize {
        self.map[e]
    }

    /// Elementwise image `π(S)`.
    pub fn image(&self, s: Subset) -> Subset {
        assert_eq!(self.map.len(), s.ground().len(), "permutation size mismatch");
        let mut out = s.ground().empty();
        for e in s.iter() {
            out = out.with(self.map[e]);
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (e, &v) in self.map.iter().enumerate() {
            inv[v] = e;
        }
        Permutation { map: inv }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_and_empty() {
        let g = GroundSet::new(6);
        assert_eq!(g.full().len(), 6);
        assert_eq!(g.empty().len(), 0);
        assert_eq!(g.full().complement(), g.empty());
        assert_eq!(GroundSet::new(0).full(), GroundSet::new(0).empty());
    }

    #[test]
    fn subsets_ascend_by_mask() {
        let g = GroundSet::new(5);
        let s = g.subset_of(&[0, 2, 4]);
        let all: Vec<u64> = s.subsets().map(|x| x.bits()).collect();
        assert_eq!(all.len(), 8);
        let mut sorted = all.clone();
        sorted.sort_unstable();
        assert_eq!(all, sorted);
        assert_eq!(all[0], 0);
        assert_eq!(*all.last().unwrap(), s.bits());
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 2]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.inverse().as_slice(), &[2, 0, 1]);
    }

    #[test]
    fn image_roundtrip() {
        let g = GroundSet::new(6);
        let p = Permutation::new(vec![5, 4, 3, 2, 1, 0]).unwrap();
        let s = g.subset_of(&[0, 1, 5]);
        assert_eq!(p.inverse().image(p.image(s)), s);
    }

    fn model(s: Subset) -> BTreeSet<usize> {
        s.iter().collect()
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(a in 0u64..1 << 12, b in 0u64..1 << 12) {
            let g = GroundSet::new(12);
            let x = Subset::from_bits(g, a);
            let y = Subset::from_bits(g, b);
            let (mx, my) = (model(x), model(y));
            prop_assert_eq!(model(x.union(y)), mx.union(&my).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(model(x.intersect(y)), mx.intersection(&my).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(model(x.minus(y)), mx.difference(&my).copied().collect::<BTreeSet<_>>());
            prop_assert_eq!(x.len(), mx.len());
            prop_assert_eq!(x.is_subset_of(y), mx.is_subset(&my));
            prop_assert_eq!(model(x.complement()), g.elements().filter(|e| !mx.contains(e)).collect::<BTreeSet<_>>());
        }
    }
}
