//! Exhaustive verification of the matroid axioms for small ground sets.

use serde::Serialize;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Largest ground set the exhaustive checker accepts.
pub const AXIOM_CHECK_MAX: usize = 16;

/// First violation found by [`check_independence_axioms`], if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    /// The empty set is dependent.
    EmptyDependent,
    /// A singleton is dependent.
    Loop { element: usize },
    /// An independent set with a dependent subset.
    Heredity { set: Subset, subset: Subset },
    /// Independent sets of sizes `s` and `s+1` with no augmenting element.
    Exchange { smaller: Subset, larger: Subset },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::EmptyDependent => write!(f, "the empty set is dependent"),
            AxiomViolation::Loop { element } => write!(f, "element {element} is a loop"),
            AxiomViolation::Heredity { set, subset } => {
                write!(f, "heredity fails: {subset} ⊂ {set} but only the superset is independent")
            }
            AxiomViolation::Exchange { smaller, larger } => {
                write!(f, "exchange fails between {smaller} and {larger}")
            }
        }
    }
}

/// Checks empty-set independence, looplessness, heredity, and the exchange
/// axiom for an arbitrary predicate over subsets of `domain`. Returns the
/// first violation in a fixed deterministic order, or `None` when the
/// predicate is a loopless matroid on `domain`.
///
/// Exchange is only tested between independent sets whose sizes differ by
/// one; together with heredity that implies the general axiom.
pub fn check_independence_axioms<F>(
    ground: GroundSet,
    domain: Subset,
    is_independent: F,
) -> Result<Option<AxiomViolation>, Error>
where
    F: Fn(Subset) -> bool,
{
    if ground.len() > AXIOM_CHECK_MAX {
        return Err(Error::GroundTooLarge { n: ground.len(), max: AXIOM_CHECK_MAX });
    }
    if !is_independent(ground.empty()) {
        return Ok(Some(AxiomViolation::EmptyDependent));
    }
    for e in domain.iter() {
        if !is_independent(ground.singleton(e)) {
            return Ok(Some(AxiomViolation::Loop { element: e }));
        }
    }

    let independent: Vec<Subset> = domain.subsets().filter(|&s| is_independent(s)).collect();

    for &s in &independent {
        for x in s.iter() {
            let sub = s.without(x);
            if !is_independent(sub) {
                return Ok(Some(AxiomViolation::Heredity { set: s, subset: sub }));
            }
        }
    }

    let mut by_size: Vec<Vec<Subset>> = vec![Vec::new(); domain.len() + 1];
    for &s in &independent {
        by_size[s.len()].push(s);
    }
    for size in 0..domain.len() {
        for &small in &by_size[size] {
            'pair: for &large in &by_size[size + 1] {
                for e in large.minus(small).iter() {
                    if is_independent(small.with(e)) {
                        continue 'pair;
                    }
                }
                return Ok(Some(AxiomViolation::Exchange { smaller: small, larger: large }));
            }
        }
    }
    Ok(None)
}

impl Matroid {
    /// Exhaustive axiom check over the usable elements of this oracle.
    pub fn verify_axioms(&self) -> Result<Option<AxiomViolation>, Error> {
        check_independence_axioms(self.ground(), self.admissible(), |s| {
            self.is_independent(s).expect("query within the admissible domain")
        })
    }
}
