//! Matroid coloring: chromatic number, k-colorability with certificates, and
//! the constructive cooperative / list coloring solver.
//!
//! The solver realizes the union-theorem argument directly: given matroids
//! `N_1, …, N_t` on one ground set and size-`k` lists `L(e) ⊆ {1, …, t}`, it
//! restricts each `N_i` to `E_i = {e : i ∈ L(e)}` and partitions the ground
//! set across those restrictions. Whenever every `N_i` is `k`-colorable the
//! partition succeeds, and the resulting coloring respects the lists with
//! each color class independent in its own matroid. A failed partition
//! yields a deficiency certificate, which proves that some hypothesis was
//! violated rather than signalling a solver limitation.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::partition::{partition_ground_set, DeficiencyCertificate, PartitionOutcome};
use crate::set::{GroundSet, Permutation, Subset};

/// Limit for the exhaustive chromatic-number formula.
pub const CHROMATIC_FORMULA_MAX: usize = 20;

/// Per-element color lists `L(e) ⊆ {1, …, t}`, all of one size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    ground: GroundSet,
    palette: usize,
    list_size: usize,
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Validates that every list holds `k` distinct colors from `1..=t`.
    pub fn new(
        ground: GroundSet,
        palette: usize,
        lists: Vec<Vec<usize>>,
    ) -> Result<ListAssignment, Error> {
        if lists.len() != ground.len() {
            return Err(Error::MalformedLists(format!(
                "{} lists for {} elements",
                lists.len(),
                ground.len()
            )));
        }
        let list_size = lists.first().map_or(0, Vec::len);
        if !ground.is_empty() && list_size == 0 {
            return Err(Error::MalformedLists("empty color list".into()));
        }
        if list_size > palette {
            return Err(Error::MalformedLists(format!(
                "list size {list_size} exceeds palette size {palette}"
            )));
        }
        let mut sorted = Vec::with_capacity(lists.len());
        for (e, list) in lists.into_iter().enumerate() {
            if list.len() != list_size {
                return Err(Error::MalformedLists(format!(
                    "element {e} has {} colors, expected {list_size}",
                    list.len()
                )));
            }
            let mut list = list;
            list.sort_unstable();
            list.dedup();
            if list.len() != list_size {
                return Err(Error::MalformedLists(format!("element {e} repeats a color")));
            }
            if list.iter().any(|&c| c == 0 || c > palette) {
                return Err(Error::MalformedLists(format!(
                    "element {e} names a color outside 1..={palette}"
                )));
            }
            sorted.push(list);
        }
        Ok(ListAssignment { ground, palette, list_size, lists: sorted })
    }

    /// Full lists `L(e) = {1, …, k}` with palette size `k`.
    pub fn full(ground: GroundSet, k: usize) -> ListAssignment {
        let lists = vec![(1..=k).collect(); ground.len()];
        ListAssignment { ground, palette: k, list_size: k, lists }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Palette size `t`.
    pub fn palette(&self) -> usize {
        self.palette
    }

    /// List size `k`.
    pub fn list_size(&self) -> usize {
        self.list_size
    }

    pub fn colors(&self, e: usize) -> &[usize] {
        &self.lists[e]
    }

    pub fn allows(&self, e: usize, color: usize) -> bool {
        self.lists[e].binary_search(&color).is_ok()
    }

    /// `E_i = {e : i ∈ L(e)}` for a 1-based color.
    pub fn elements_allowing(&self, color: usize) -> Subset {
        let mut s = self.ground.empty();
        for e in self.ground.elements() {
            if self.allows(e, color) {
                s = s.with(e);
            }
        }
        s
    }

    /// JSON-style map `element id → color list`.
    pub fn to_map(&self) -> BTreeMap<usize, Vec<usize>> {
        self.lists.iter().cloned().enumerate().collect()
    }
}

/// A (possibly partial) coloring `e ↦ color ∈ {1, …, t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    ground: GroundSet,
    palette: usize,
    assigned: Vec<Option<usize>>,
}

impl Coloring {
    pub fn new(ground: GroundSet, palette: usize) -> Coloring {
        Coloring { ground, palette, assigned: vec![None; ground.len()] }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn set(&mut self, e: usize, color: usize) {
        assert!(color >= 1 && color <= self.palette, "color {color} outside palette");
        self.assigned[e] = Some(color);
    }

    pub fn color_of(&self, e: usize) -> Option<usize> {
        self.assigned[e]
    }

    /// The class `f⁻¹(color)` as a subset.
    pub fn class(&self, color: usize) -> Subset {
        let mut s = self.ground.empty();
        for (e, &c) in self.assigned.iter().enumerate() {
            if c == Some(color) {
                s = s.with(e);
            }
        }
        s
    }

    pub fn is_complete(&self) -> bool {
        self.assigned.iter().all(Option::is_some)
    }

    pub fn domain(&self) -> Subset {
        let mut s = self.ground.empty();
        for (e, c) in self.assigned.iter().enumerate() {
            if c.is_some() {
                s = s.with(e);
            }
        }
        s
    }

    /// Checks that class `i` is independent in `matroids[i-1]`, via fresh
    /// oracle calls. Queries outside a restriction count as failures.
    pub fn classes_independent(&self, matroids: &[Matroid]) -> bool {
        if matroids.len() != self.palette {
            return false;
        }
        matroids.iter().enumerate().all(|(i, m)| {
            let class = self.class(i + 1);
            class.is_subset_of(m.admissible()) && m.is_independent(class).unwrap_or(false)
        })
    }

    /// Checks that every assigned color comes from its element's list.
    pub fn respects_lists(&self, lists: &ListAssignment) -> bool {
        self.assigned
            .iter()
            .enumerate()
            .all(|(e, c)| c.is_none_or(|c| lists.allows(e, c)))
    }

    /// JSON-style map `element id → color` over the assigned elements.
    pub fn to_map(&self) -> BTreeMap<usize, usize> {
        self.assigned
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.map(|c| (e, c)))
            .collect()
    }

    fn from_parts(ground: GroundSet, parts: &[Subset]) -> Coloring {
        let mut coloring = Coloring::new(ground, parts.len());
        for (i, part) in parts.iter().enumerate() {
            for e in part.iter() {
                coloring.set(e, i + 1);
            }
        }
        coloring
    }
}

/// Least `k` for which `k` copies of the matroid partition its usable
/// elements, found by linear search from 1. An empty matroid has chromatic
/// number 0 by convention.
pub fn chromatic_number(m: &Matroid) -> Result<usize, Error> {
    let target = m.admissible();
    if target.is_empty() {
        return Ok(0);
    }
    for k in 1..=target.len() {
        let copies = vec![m.clone(); k];
        if let PartitionOutcome::Partitioned(_) = partition_ground_set(&copies, target)? {
            return Ok(k);
        }
    }
    unreachable!("a loopless matroid is |E|-colorable by singletons");
}

/// Chromatic number as `max over nonempty A of ⌈|A| / r(A)⌉`, by exhaustive
/// enumeration, with the lexicographically least maximizing subset. This is
/// the independent cross-check for [`chromatic_number`].
pub fn chromatic_number_formula_bf(m: &Matroid) -> Result<(usize, Subset), Error> {
    let domain = m.admissible();
    if domain.len() > CHROMATIC_FORMULA_MAX {
        return Err(Error::TooLarge {
            what: "chromatic-formula ground set",
            size: domain.len() as u64,
            max: CHROMATIC_FORMULA_MAX as u64,
        });
    }
    if domain.is_empty() {
        return Ok((0, domain));
    }
    let mut best = 0usize;
    let mut witness = m.ground().empty();
    for a in domain.subsets() {
        if a.is_empty() {
            continue;
        }
        let r = m.rank(a)?;
        if r == 0 {
            return Err(Error::LoopDetected {
                element: a.iter().next().expect("nonempty subset"),
            });
        }
        let ratio = a.len().div_ceil(r);
        if ratio > best {
            best = ratio;
            witness = a;
        }
    }
    Ok((best, witness))
}

/// Verdict of [`is_k_colorable`].
#[derive(Clone, Debug)]
pub enum KColorability {
    /// An explicit proper coloring with at most `k` classes.
    Colorable(Coloring),
    /// A witness `X` with `r(X) < |X| / k`.
    NotColorable(DeficiencyCertificate),
}

/// Decides whether the usable elements split into `k` independent sets,
/// returning either an explicit coloring or a deficiency witness.
pub fn is_k_colorable(m: &Matroid, k: usize) -> Result<KColorability, Error> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let copies = vec![m.clone(); k];
    match partition_ground_set(&copies, m.admissible())? {
        PartitionOutcome::Partitioned(parts) => {
            Ok(KColorability::Colorable(Coloring::from_parts(m.ground(), &parts)))
        }
        PartitionOutcome::Deficient(cert) => Ok(KColorability::NotColorable(cert)),
    }
}

/// The element set a system colors: what every member matroid can use. For
/// matroids on the full ground set this is the whole ground set; for a
/// system of equal restrictions it is their shared domain.
pub fn common_usable(matroids: &[Matroid]) -> Subset {
    let mut usable = matroids[0].ground().full();
    for m in matroids {
        usable = usable.intersect(m.admissible());
    }
    usable
}

/// Colors every usable element from per-element lists so that class `i` is
/// independent in `matroids[i-1]`.
///
/// The partition across the per-color restrictions is a complete decision
/// procedure, so the solver always attempts it: under the hypotheses
/// (`|L(e)| = k`, every matroid `k`-colorable) it provably succeeds, and on
/// any failure the returned [`Error::Infeasible`] certificate demonstrates
/// that some hypothesis was violated. Instances outside the hypotheses are
/// still decided exactly rather than rejected up front.
pub fn coop_list_color(
    matroids: &[Matroid],
    lists: &ListAssignment,
) -> Result<Coloring, Error> {
    let t = matroids.len();
    if t == 0 {
        return Err(Error::Precondition("at least one matroid is required".into()));
    }
    if lists.palette() != t {
        return Err(Error::MalformedLists(format!(
            "palette size {} does not match the {t} matroids",
            lists.palette()
        )));
    }
    let ground = matroids[0].ground();
    if lists.ground() != ground {
        return Err(Error::Precondition("lists and matroids disagree on the ground set".into()));
    }
    if ground.is_empty() {
        return Ok(Coloring::new(ground, t));
    }

    let slots: Vec<Matroid> = matroids
        .iter()
        .enumerate()
        .map(|(i, n)| n.restrict(lists.elements_allowing(i + 1)))
        .collect();
    match partition_ground_set(&slots, common_usable(matroids))? {
        PartitionOutcome::Partitioned(parts) => Ok(Coloring::from_parts(ground, &parts)),
        PartitionOutcome::Deficient(cert) => Err(Error::Infeasible(Box::new(cert))),
    }
}

/// Cooperative coloring of `k` matroids: the full-list special case of
/// [`coop_list_color`] with `t = k`.
pub fn cooperative_color(matroids: &[Matroid]) -> Result<Coloring, Error> {
    if matroids.is_empty() {
        return Err(Error::Precondition("at least one matroid is required".into()));
    }
    let lists = ListAssignment::full(matroids[0].ground(), matroids.len());
    coop_list_color(matroids, &lists)
}

/// Splits the edges of a graph into `k` classes `F_1, …, F_k` so that `F_1`
/// is a forest and `π_{i-1}(F_i)` is a forest for each later class, where
/// the `k − 1` permutations act on edge ids. Requires arboricity at most
/// `k`; the error certificate names an edge set that is too dense.
pub fn forest_permutation_decomposition(
    vertices: usize,
    edges: &[(usize, usize)],
    perms: &[Permutation],
) -> Result<Vec<Subset>, Error> {
    let base = Matroid::graphic(vertices, edges.to_vec())?;
    let k = perms.len() + 1;
    if let KColorability::NotColorable(cert) = is_k_colorable(&base, k)? {
        return Err(Error::ArboricityTooHigh(Box::new(cert)));
    }
    let mut matroids = vec![base.clone()];
    for p in perms {
        matroids.push(base.pullback(p.clone())?);
    }
    let coloring = cooperative_color(&matroids)?;
    Ok((1..=k).map(|i| coloring.class(i)).collect())
}
