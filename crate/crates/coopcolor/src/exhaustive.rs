//! Deliberately naive exhaustive oracles.
//!
//! Everything here recomputes answers by full enumeration and never shares
//! code with the constructive algorithms it validates, so the two sides of
//! every cross-check stay independent.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Guard on `t^|E|` for exhaustive coloring enumeration.
pub const COLORING_ENUM_MAX: u128 = 10_000_000;
/// Guard for exhaustive independent-set counting.
pub const COUNT_MAX: usize = 20;
/// Guard for materializing the independent-set listing.
pub const LIST_MAX: usize = 12;

/// Decides list colorability of the system's usable elements by enumerating
/// every list-respecting coloring in element-major order (last element
/// cycling fastest) and returns the first valid one.
pub fn coop_colorable_bf(
    matroids: &[Matroid],
    lists: &ListAssignment,
) -> Result<Option<Coloring>, Error> {
    let ground = lists.ground();
    let usable: Vec<usize> = crate::coloring::common_usable(matroids).elements();
    let t = matroids.len() as u128;
    let total = t.checked_pow(usable.len() as u32).unwrap_or(u128::MAX);
    if total > COLORING_ENUM_MAX {
        return Err(Error::TooLarge {
            what: "list-coloring enumeration",
            size: u64::try_from(total).unwrap_or(u64::MAX),
            max: COLORING_ENUM_MAX as u64,
        });
    }
    if usable.is_empty() {
        return Ok(Some(Coloring::new(ground, matroids.len())));
    }

    let valid = |choice: &[usize]| -> bool {
        for (i, m) in matroids.iter().enumerate() {
            let mut class = ground.empty();
            for (slot, &pos) in choice.iter().enumerate() {
                let e = usable[slot];
                if lists.colors(e)[pos] == i + 1 {
                    class = class.with(e);
                }
            }
            if !class.is_subset_of(m.admissible()) || !m.is_independent(class).unwrap_or(false) {
                return false;
            }
        }
        true
    };

    // odometer over per-element positions into each sorted list
    let mut choice = vec![0usize; usable.len()];
    loop {
        if valid(&choice) {
            let mut coloring = Coloring::new(ground, matroids.len());
            for (slot, &pos) in choice.iter().enumerate() {
                let e = usable[slot];
                coloring.set(e, lists.colors(e)[pos]);
            }
            return Ok(Some(coloring));
        }
        let mut e = usable.len();
        loop {
            if e == 0 {
                return Ok(None);
            }
            e -= 1;
            choice[e] += 1;
            if choice[e] < lists.colors(usable[e]).len() {
                break;
            }
            choice[e] = 0;
        }
    }
}

/// Counts independent subsets by querying the oracle on every subset of the
/// usable elements.
pub fn count_independent_sets(m: &Matroid) -> Result<u64, Error> {
    let domain = m.admissible();
    if domain.len() > COUNT_MAX {
        return Err(Error::TooLarge {
            what: "independent-set count",
            size: domain.len() as u64,
            max: COUNT_MAX as u64,
        });
    }
    let mut count = 0;
    for s in domain.subsets() {
        if m.is_independent(s)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Materializes every independent subset in ascending bitmask order.
pub fn independent_sets(m: &Matroid) -> Result<Vec<Subset>, Error> {
    let domain = m.admissible();
    if domain.len() > LIST_MAX {
        return Err(Error::TooLarge {
            what: "independent-set listing",
            size: domain.len() as u64,
            max: LIST_MAX as u64,
        });
    }
    let mut out = Vec::new();
    for s in domain.subsets() {
        if m.is_independent(s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// `max { |I| : I ⊆ within, I independent }` by plain enumeration; the
/// ground-truth twin of greedy rank.
pub fn max_independent_subset_size(m: &Matroid, within: Subset) -> Result<usize, Error> {
    if within.len() > COUNT_MAX {
        return Err(Error::TooLarge {
            what: "exhaustive rank subset",
            size: within.len() as u64,
            max: COUNT_MAX as u64,
        });
    }
    let mut best = 0;
    for s in within.subsets() {
        if s.len() > best && m.is_independent(s)? {
            best = s.len();
        }
    }
    Ok(best)
}

/// Runs `f` on every list assignment with palette `t` and list size `k`
/// when there are at most `limit` of them, otherwise on 1000 assignments
/// sampled with the given seed. Used by property suites that quantify over
/// "all lists".
pub fn for_each_list_assignment<F>(
    ground: GroundSet,
    t: usize,
    k: usize,
    limit: u128,
    seed: u64,
    mut f: F,
) -> Result<(), Error>
where
    F: FnMut(&ListAssignment),
{
    let combos = color_combinations(t, k);
    if combos.is_empty() {
        return Err(Error::MalformedLists(format!("no {k}-subsets of 1..={t}")));
    }
    let n = ground.len();
    let total = (combos.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total <= limit {
        let mut choice = vec![0usize; n];
        loop {
            let lists: Vec<Vec<usize>> = choice.iter().map(|&c| combos[c].clone()).collect();
            f(&ListAssignment::new(ground, t, lists).expect("generated lists are well-formed"));
            let mut e = n;
            loop {
                if e == 0 {
                    return Ok(());
                }
                e -= 1;
                choice[e] += 1;
                if choice[e] < combos.len() {
                    break;
                }
                choice[e] = 0;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let lists: Vec<Vec<usize>> =
            (0..n).map(|_| combos[rng.random_range(0..combos.len())].clone()).collect();
        f(&ListAssignment::new(ground, t, lists).expect("generated lists are well-formed"));
    }
    Ok(())
}

/// All sorted `k`-subsets of `1..=t`.
pub fn color_combinations(t: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << t {
        if mask.count_ones() as usize == k {
            out.push((0..t).filter(|c| mask >> c & 1 == 1).map(|c| c + 1).collect());
        }
    }
    out
}
