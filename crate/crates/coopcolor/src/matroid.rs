//! Matroid independence oracles.
//!
//! A [`Matroid`] couples a ground set of dense element ids with an
//! independence predicate. Four concrete families are built in (uniform,
//! graphic, partition, linear over a prime field), plus two derived forms
//! (restriction to a subset, pullback along a permutation). All constructors
//! reject loops: every usable singleton must be independent, since chromatic
//! quantities are undefined otherwise.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::set::{GroundSet, Permutation, Subset, MAX_GROUND};
use crate::union_find::is_forest;

/// Largest prime modulus accepted for linear matroids.
pub const MAX_LINEAR_PRIME: u64 = 251;

/// Serializable description of a matroid, the exchange format used by system
/// files. `build` turns it into a queryable oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatroidSpec {
    /// Independent sets are those of size at most `rank`.
    Uniform { n: usize, rank: usize },
    /// Elements are edges `[u, v]`; independent sets are forests.
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    /// Blocks partition the ids `0..n`; a set is independent when it meets
    /// block `j` in at most `capacities[j]` elements.
    Partition { blocks: Vec<Vec<usize>>, capacities: Vec<usize> },
    /// Elements are column vectors over GF(`prime`); independence is linear.
    Linear { prime: u64, columns: Vec<Vec<u64>> },
    /// Same id space as `inner`, but only elements of `subset` are usable.
    Restriction { inner: Box<MatroidSpec>, subset: Vec<usize> },
    /// `S` is independent iff the elementwise image `π(S)` is independent in
    /// `inner`.
    Pullback { inner: Box<MatroidSpec>, permutation: Vec<usize> },
}

impl MatroidSpec {
    /// Ground-set size implied by the description.
    pub fn ground_size(&self) -> usize {
        match self {
            MatroidSpec::Uniform { n, .. } => *n,
            MatroidSpec::Graphic { edges, .. } => edges.len(),
            MatroidSpec::Partition { blocks, .. } => blocks.iter().map(Vec::len).sum(),
            MatroidSpec::Linear { columns, .. } => columns.len(),
            MatroidSpec::Restriction { inner, .. } => inner.ground_size(),
            MatroidSpec::Pullback { inner, .. } => inner.ground_size(),
        }
    }

    /// Validates the description and constructs the oracle.
    pub fn build(&self) -> Result<Matroid, Error> {
        let n = self.ground_size();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge { n, max: MAX_GROUND });
        }
        match self {
            MatroidSpec::Uniform { n, rank } => Matroid::uniform(*n, *rank),
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges.clone()),
            MatroidSpec::Partition { blocks, capacities } => {
                Matroid::partition(blocks.clone(), capacities.clone())
            }
            MatroidSpec::Linear { prime, columns } => Matroid::linear(*prime, columns.clone()),
            MatroidSpec::Restriction { inner, subset } => {
                let inner = inner.build()?;
                let domain = inner.ground().try_subset_of(subset)?;
                Ok(inner.restrict(domain))
            }
            MatroidSpec::Pullback { inner, permutation } => {
                let inner = inner.build()?;
                if permutation.len() != inner.ground().len() {
                    return Err(Error::MalformedSpec(format!(
                        "permutation has {} entries for a ground set of {}",
                        permutation.len(),
                        inner.ground().len()
                    )));
                }
                inner.pullback(Permutation::new(permutation.clone())?)
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Kind {
    Uniform {
        rank: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Partition {
        block_of: Vec<usize>,
        capacities: Vec<usize>,
    },
    Linear {
        prime: u64,
        columns: Vec<Vec<u64>>,
    },
    Restriction {
        inner: Box<Matroid>,
        domain: Subset,
    },
    Pullback {
        inner: Box<Matroid>,
        perm: Permutation,
    },
}

/// A loopless matroid independence oracle over a [`GroundSet`].
///
/// Oracles are immutable after construction; every operation is a pure
/// function of its inputs, so shared references may be queried concurrently.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    admissible: Subset,
    kind: Kind,
}

impl Matroid {
    pub fn uniform(n: usize, rank: usize) -> Result<Matroid, Error> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge { n, max: MAX_GROUND });
        }
        let ground = GroundSet::new(n);
        Self::finish(Matroid { ground, admissible: ground.full(), kind: Kind::Uniform { rank } })
    }

    /// The free matroid: every subset independent.
    pub fn free(n: usize) -> Result<Matroid, Error> {
        Matroid::uniform(n, n)
    }

    /// Graphic matroid on the edge list; element `i` is `edges[i]`.
    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Matroid, Error> {
        if edges.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge { n: edges.len(), max: MAX_GROUND });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::MalformedSpec(format!(
                    "edge {i} = ({u}, {v}) references a vertex >= {vertices}"
                )));
            }
        }
        let ground = GroundSet::new(edges.len());
        Self::finish(Matroid {
            ground,
            admissible: ground.full(),
            kind: Kind::Graphic { vertices, edges },
        })
    }

    /// Partition matroid: `blocks` must partition `0..n` exactly.
    pub fn partition(blocks: Vec<Vec<usize>>, capacities: Vec<usize>) -> Result<Matroid, Error> {
        if capacities.len() != blocks.len() {
            return Err(Error::MalformedSpec(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge { n, max: MAX_GROUND });
        }
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= n || block_of[e] != usize::MAX {
                    return Err(Error::MalformedSpec(format!(
                        "blocks do not partition 0..{n}: element {e} repeated or out of range"
                    )));
                }
                block_of[e] = b;
            }
        }
        let ground = GroundSet::new(n);
        Self::finish(Matroid {
            ground,
            admissible: ground.full(),
            kind: Kind::Partition { block_of, capacities },
        })
    }

    /// Linear matroid over GF(`prime`): element `i` is `columns[i]`.
    pub fn linear(prime: u64, columns: Vec<Vec<u64>>) -> Result<Matroid, Error> {
        if columns.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge { n: columns.len(), max: MAX_GROUND });
        }
        if !(2..=MAX_LINEAR_PRIME).contains(&prime) || !is_prime(prime) {
            return Err(Error::MalformedSpec(format!(
                "modulus {prime} is not a prime in 2..={MAX_LINEAR_PRIME}"
            )));
        }
        let dim = columns.first().map_or(0, Vec::len);
        for (i, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::MalformedSpec(format!(
                    "column {i} has {} entries, expected {dim}",
                    col.len()
                )));
            }
            if col.iter().any(|&x| x >= prime) {
                return Err(Error::MalformedSpec(format!(
                    "column {i} has an entry outside 0..{prime}"
                )));
            }
        }
        let ground = GroundSet::new(columns.len());
        Self::finish(Matroid {
            ground,
            admissible: ground.full(),
            kind: Kind::Linear { prime, columns },
        })
    }

    /// Rejects loops among usable elements; every other invariant is
    /// structural and already validated.
    fn finish(m: Matroid) -> Result<Matroid, Error> {
        for e in m.admissible.iter() {
            if !m.is_independent(m.ground.singleton(e))? {
                return Err(Error::LoopDetected { element: e });
            }
        }
        Ok(m)
    }

    /// Restriction to `domain`, keeping the parent id space. Queries touching
    /// elements outside `domain` fail with [`Error::OutOfRestriction`].
    pub fn restrict(&self, domain: Subset) -> Matroid {
        Matroid {
            ground: self.ground,
            admissible: self.admissible.intersect(domain),
            kind: Kind::Restriction { inner: Box::new(self.clone()), domain },
        }
    }

    /// Pullback along `perm`: `S` independent iff `perm(S)` is independent in
    /// `self`.
    pub fn pullback(&self, perm: Permutation) -> Result<Matroid, Error> {
        if perm.len() != self.ground.len() {
            return Err(Error::MalformedSpec(format!(
                "permutation on {} ids applied to a ground set of {}",
                perm.len(),
                self.ground.len()
            )));
        }
        let admissible = perm.inverse().image(self.admissible);
        Ok(Matroid {
            ground: self.ground,
            admissible,
            kind: Kind::Pullback { inner: Box::new(self.clone()), perm },
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Usable elements: the full ground set except under restriction.
    pub fn admissible(&self) -> Subset {
        self.admissible
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::Uniform { .. } => "uniform",
            Kind::Graphic { .. } => "graphic",
            Kind::Partition { .. } => "partition",
            Kind::Linear { .. } => "linear",
            Kind::Restriction { .. } => "restriction",
            Kind::Pullback { .. } => "pullback",
        }
    }

    /// The independence predicate.
    pub fn is_independent(&self, s: Subset) -> Result<bool, Error> {
        assert_eq!(s.ground(), self.ground, "subset from a different ground set");
        match &self.kind {
            Kind::Uniform { rank } => Ok(s.len() <= *rank),
            Kind::Graphic { vertices, edges } => Ok(is_forest(*vertices, edges, s.iter())),
            Kind::Partition { block_of, capacities } => {
                let mut counts = vec![0usize; capacities.len()];
                for e in s.iter() {
                    let b = block_of[e];
                    counts[b] += 1;
                    if counts[b] > capacities[b] {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Kind::Linear { prime, columns } => {
                let rows: Vec<Vec<u64>> = s.iter().map(|e| columns[e].clone()).collect();
                Ok(gf_rank(rows, *prime) == s.len())
            }
            Kind::Restriction { inner, domain } => {
                if let Some(e) = s.minus(*domain).iter().next() {
                    return Err(Error::OutOfRestriction { element: e });
                }
                inner.is_independent(s)
            }
            Kind::Pullback { inner, perm } => inner.is_independent(perm.image(s)),
        }
    }

    /// Size of a maximal independent subset of `s`, grown greedily in
    /// ascending id order; correct by the exchange axiom and deterministic.
    pub fn rank(&self, s: Subset) -> Result<usize, Error> {
        let mut cur = self.ground.empty();
        for e in s.iter() {
            if self.is_independent(cur.with(e))? {
                cur = cur.with(e);
            }
        }
        Ok(cur.len())
    }

    /// Rank of the usable ground set.
    pub fn full_rank(&self) -> Result<usize, Error> {
        self.rank(self.admissible)
    }

    /// The unique circuit inside `a ∪ {e}` for independent `a`, or `None`
    /// when `a ∪ {e}` is itself independent. Uses the standard test
    /// `x ∈ C(a, e) ⇔ (a ∪ {e}) ∖ {x}` independent.
    pub fn fundamental_circuit(&self, a: Subset, e: usize) -> Result<Option<Subset>, Error> {
        if a.contains(e) {
            return Err(Error::Precondition(format!("element {e} already belongs to the set")));
        }
        if !self.is_independent(a)? {
            return Err(Error::NotIndependent);
        }
        let with_e = a.with(e);
        if self.is_independent(with_e)? {
            return Ok(None);
        }
        let mut circuit = self.ground.empty();
        for x in with_e.iter() {
            if self.is_independent(with_e.without(x))? {
                circuit = circuit.with(x);
            }
        }
        Ok(Some(circuit))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row rank over GF(`p`) by Gaussian elimination; consumes the rows.
fn gf_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot) = (rank..height).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_pow(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    let sub = factor * pv % p;
                    *x = (*x + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The complete-graph test fixture used throughout the docs and tests:
/// vertices `0..4`, edges `e0=(0,1) e1=(0,2) e2=(0,3) e3=(1,2) e4=(1,3)
/// e5=(2,3)`.
pub fn k4_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}
