//! The painting game (online list coloring). In round `i` Ben picks a set
//! `B_i` of uncolored elements, each of which may be picked at most `k`
//! times in total; Ann then colors any independent-in-`M_i` subset of `B_i`
//! with color `i`. The game lasts `t` rounds, one per matroid.
//!
//! Who wins an unfinished board is ambiguous in the folklore phrasing, so
//! both readings are implemented as [`PaintingRules`]:
//!
//! * [`NoDeadElement`](PaintingRules::NoDeadElement) (default): Ben wins as
//!   soon as some element has spent its `k` picks while uncolored; if that
//!   never happens Ann wins after round `t`. This matches the paintability
//!   literature and makes the single-matroid case an online list-coloring
//!   game.
//! * [`StrictAllColored`](PaintingRules::StrictAllColored): Ann wins iff
//!   everything is colored after round `t`. Ben can then win trivially by
//!   picking nothing, which is exactly why the variant is kept: it documents
//!   the degenerate reading.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::coloring::chromatic_number;
use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

use super::indicated::common_ground;
use super::{solve, Game, Player, Status};

/// Ground-set guard for the painting solver (Ben branches over subsets).
pub const PAINTING_MAX_GROUND: usize = 5;
/// Slot guard for the painting solver.
pub const PAINTING_MAX_SLOTS: usize = 3;
/// Marks are packed four bits per element.
pub const PAINTING_MAX_BUDGET: usize = 15;
/// Guard on the number of systems one conjecture search may enumerate.
pub const CONJECTURE_MAX_INSTANCES: u128 = 100_000;

/// Win condition variants; see the module docs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PaintingRules {
    #[default]
    NoDeadElement,
    StrictAllColored,
}

impl std::fmt::Display for PaintingRules {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PaintingRules::NoDeadElement => write!(f, "no-dead-element"),
            PaintingRules::StrictAllColored => write!(f, "strict-all-colored"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct PaintingState {
    /// Bitmask of colored elements.
    pub colored: u64,
    /// Pick counts, four bits per element.
    pub marks: u64,
    /// 1-based round; round `i` uses color `i`.
    pub round: u8,
    /// Ben's current offer awaiting Ann's reply, if any.
    pub offer: Option<u64>,
}

impl PaintingState {
    pub fn mark_of(&self, e: usize) -> usize {
        (self.marks >> (4 * e) & 0xf) as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum PaintingMove {
    /// Ben offers a bitmask of pickable elements (possibly empty).
    Offer(u64),
    /// Ann colors a bitmask subset of the offer (possibly empty).
    Paint(u64),
}

pub struct PaintingGame<'a> {
    matroids: &'a [Matroid],
    ground: GroundSet,
    budget: usize,
    rules: PaintingRules,
}

impl<'a> PaintingGame<'a> {
    pub fn new(
        matroids: &'a [Matroid],
        budget: usize,
        rules: PaintingRules,
    ) -> Result<PaintingGame<'a>, Error> {
        let ground = common_ground(matroids)?;
        if ground.len() > PAINTING_MAX_GROUND || matroids.len() > PAINTING_MAX_SLOTS {
            return Err(Error::StateSpaceTooLarge(format!(
                "painting game accepts at most {PAINTING_MAX_GROUND} elements and {PAINTING_MAX_SLOTS} matroids, got {} and {}",
                ground.len(),
                matroids.len()
            )));
        }
        if budget > PAINTING_MAX_BUDGET {
            return Err(Error::Precondition(format!(
                "pick budget {budget} exceeds {PAINTING_MAX_BUDGET}"
            )));
        }
        Ok(PaintingGame { matroids, ground, budget, rules })
    }

    pub fn rounds(&self) -> usize {
        self.matroids.len()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn bump_marks(&self, marks: u64, picked: u64) -> u64 {
        let mut out = marks;
        let mut bits = picked;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out += 1 << (4 * e);
        }
        out
    }

    /// Elements Ben may still pick: uncolored with marks below the budget.
    fn eligible(&self, state: &PaintingState) -> u64 {
        let mut bits = 0;
        for e in 0..self.ground.len() {
            if state.colored >> e & 1 == 0 && state.mark_of(e) < self.budget {
                bits |= 1 << e;
            }
        }
        bits
    }
}

impl Game for PaintingGame<'_> {
    type State = PaintingState;
    type Key = PaintingState;
    type Move = PaintingMove;

    fn initial(&self) -> PaintingState {
        PaintingState { colored: 0, marks: 0, round: 1, offer: None }
    }

    fn status(&self, state: &PaintingState) -> Status {
        if state.colored == self.ground.full().bits() {
            return Status::Won(Player::Ann);
        }
        match state.offer {
            Some(_) => Status::Turn(Player::Ann),
            None => {
                if self.rules == PaintingRules::NoDeadElement {
                    let dead = (0..self.ground.len()).any(|e| {
                        state.colored >> e & 1 == 0 && state.mark_of(e) == self.budget
                    });
                    if dead {
                        return Status::Won(Player::Ben);
                    }
                }
                if usize::from(state.round) > self.rounds() {
                    return match self.rules {
                        PaintingRules::NoDeadElement => Status::Won(Player::Ann),
                        PaintingRules::StrictAllColored => Status::Won(Player::Ben),
                    };
                }
                Status::Turn(Player::Ben)
            }
        }
    }

    fn legal_moves(&self, state: &PaintingState, out: &mut Vec<PaintingMove>) {
        out.clear();
        match state.offer {
            None => {
                let eligible = Subset::from_bits(self.ground, self.eligible(state));
                for b in eligible.subsets() {
                    out.push(PaintingMove::Offer(b.bits()));
                }
            }
            Some(offer) => {
                let m = &self.matroids[usize::from(state.round) - 1];
                for a in Subset::from_bits(self.ground, offer).subsets() {
                    if a.is_subset_of(m.admissible()) && m.is_independent(a).unwrap_or(false) {
                        out.push(PaintingMove::Paint(a.bits()));
                    }
                }
            }
        }
    }

    fn apply(&self, state: &PaintingState, mv: PaintingMove) -> PaintingState {
        match mv {
            PaintingMove::Offer(b) => PaintingState {
                colored: state.colored,
                marks: self.bump_marks(state.marks, b),
                round: state.round,
                offer: Some(b),
            },
            PaintingMove::Paint(a) => PaintingState {
                colored: state.colored | a,
                marks: state.marks,
                round: state.round + 1,
                offer: None,
            },
        }
    }

    fn key(&self, state: &PaintingState) -> PaintingState {
        *state
    }
}

/// Family parameters for [`conjecture_search`]: systems are ordered
/// `system_size`-tuples drawn (with repetition) from the pool.
#[derive(Clone, Debug)]
pub struct ConjectureCatalog {
    pub pool: Vec<(String, Matroid)>,
    /// `k`: matroids per system, colors, rounds, and the pick budget alike.
    pub system_size: usize,
    pub rules: PaintingRules,
}

/// Why an enumerated system was or was not solved.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum InstanceStatus {
    /// Solved exactly.
    Solved { winner: Player, explored: usize },
    /// Outside the conjecture family: some chromatic number exceeds `k`.
    ChiTooHigh { chromatic: Vec<usize> },
    /// Exceeds the solver guards.
    SkippedGuard { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureInstance {
    pub index: usize,
    /// Pool indices of the system members, in round order.
    pub members: Vec<usize>,
    #[serde(flatten)]
    pub status: InstanceStatus,
}

/// Outcome of a conjecture search over one catalog.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub instances: Vec<ConjectureInstance>,
    pub solved: usize,
    pub ann_wins: usize,
    /// Indices of solved systems that Ben wins: counterexample candidates.
    pub ben_wins: Vec<usize>,
    /// Ben wins on single-matroid systems, where Ann is proven to win; any
    /// entry here indicates a solver defect rather than a counterexample.
    pub base_case_ben_wins: Vec<usize>,
    pub filtered: usize,
    pub skipped: usize,
}

/// Enumerates every system of `k` matroids with all chromatic numbers at
/// most `k`, solves the painting game on each, and reports any Ben win.
pub fn conjecture_search(catalog: &ConjectureCatalog) -> Result<ConjectureReport, Error> {
    conjecture_search_parallel(catalog, 1)
}

/// [`conjecture_search`] with instances distributed over `workers` threads.
/// Results are ordered by instance index, so the report is identical for
/// every worker count.
pub fn conjecture_search_parallel(
    catalog: &ConjectureCatalog,
    workers: usize,
) -> Result<ConjectureReport, Error> {
    let k = catalog.system_size;
    if k == 0 {
        return Err(Error::Precondition("system size must be at least 1".into()));
    }
    let pool = &catalog.pool;
    let total = (pool.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > CONJECTURE_MAX_INSTANCES {
        return Err(Error::TooLarge {
            what: "conjecture instance family",
            size: u64::try_from(total).unwrap_or(u64::MAX),
            max: CONJECTURE_MAX_INSTANCES as u64,
        });
    }
    let total = total as usize;

    let mut chromatic = Vec::with_capacity(pool.len());
    for (_, m) in pool {
        chromatic.push(chromatic_number(m)?);
    }

    let run_one = |index: usize| -> ConjectureInstance {
        let members = tuple_digits(index, pool.len(), k);
        let chis: Vec<usize> = members.iter().map(|&p| chromatic[p]).collect();
        if chis.iter().any(|&chi| chi > k) {
            return ConjectureInstance {
                index,
                members,
                status: InstanceStatus::ChiTooHigh { chromatic: chis },
            };
        }
        let ms: Vec<Matroid> = members.iter().map(|&p| pool[p].1.clone()).collect();
        match PaintingGame::new(&ms, k, catalog.rules) {
            Err(e) => ConjectureInstance {
                index,
                members,
                status: InstanceStatus::SkippedGuard { reason: e.to_string() },
            },
            Ok(game) => {
                let outcome = solve(&game);
                ConjectureInstance {
                    index,
                    members,
                    status: InstanceStatus::Solved {
                        winner: outcome.winner,
                        explored: outcome.explored,
                    },
                }
            }
        }
    };

    let instances: Vec<ConjectureInstance> = if workers <= 1 || total <= 1 {
        (0..total).map(run_one).collect()
    } else {
        let next = AtomicUsize::new(0);
        let slots: Mutex<Vec<Option<ConjectureInstance>>> = Mutex::new(vec![None; total]);
        std::thread::scope(|scope| {
            for _ in 0..workers.min(total) {
                scope.spawn(|| loop {
                    let index = next.fetch_add(1, Ordering::Relaxed);
                    if index >= total {
                        break;
                    }
                    let record = run_one(index);
                    slots.lock().expect("result mutex poisoned")[index] = Some(record);
                });
            }
        });
        slots
            .into_inner()
            .expect("result mutex poisoned")
            .into_iter()
            .map(|slot| slot.expect("every instance index was processed"))
            .collect()
    };

    let mut report = ConjectureReport {
        instances,
        solved: 0,
        ann_wins: 0,
        ben_wins: Vec::new(),
        base_case_ben_wins: Vec::new(),
        filtered: 0,
        skipped: 0,
    };
    for inst in &report.instances {
        match &inst.status {
            InstanceStatus::Solved { winner, .. } => {
                report.solved += 1;
                match winner {
                    Player::Ann => report.ann_wins += 1,
                    Player::Ben => {
                        report.ben_wins.push(inst.index);
                        if inst.members.windows(2).all(|w| w[0] == w[1]) {
                            report.base_case_ben_wins.push(inst.index);
                        }
                    }
                }
            }
            InstanceStatus::ChiTooHigh { .. } => report.filtered += 1,
            InstanceStatus::SkippedGuard { .. } => report.skipped += 1,
        }
    }
    Ok(report)
}

/// Digits of `index` in base `pool`, most significant first, width `k`.
fn tuple_digits(index: usize, pool: usize, k: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    let mut rest = index;
    for d in (0..k).rev() {
        digits[d] = rest % pool;
        rest /= pool;
    }
    digits
}
