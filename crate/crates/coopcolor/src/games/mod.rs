//! Exact solvers for the coloring games.
//!
//! The three games (indicated, marking, painting) share one engine:
//! implement [`Game`] with deterministic move generation and call [`solve`]
//! for a full memoized minimax over canonical states. No pruning and no
//! isomorphism reduction are applied; at the accepted instance sizes the
//! plain search is exact, reproducible, and fast enough.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

mod covering;
mod indicated;
mod marking;
mod painting;

pub use covering::two_covering;
pub use indicated::{IndicatedGame, IndicatedMove, IndicatedState};
pub use marking::{MarkingGame, MarkingMove, MarkingState};
pub use painting::{
    conjecture_search, conjecture_search_parallel, ConjectureCatalog, ConjectureInstance,
    ConjectureReport, InstanceStatus, PaintingGame, PaintingMove, PaintingRules, PaintingState,
};

/// Ground-set guard for the indicated and marking solvers.
pub const GAME_MAX_GROUND: usize = 8;
/// Slot guard for the indicated and marking solvers.
pub const GAME_MAX_SLOTS: usize = 4;

/// The two players. Ann wants the whole ground set colored; Ben does not.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Ann,
    Ben,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Ann => Player::Ben,
            Player::Ben => Player::Ann,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::Ann => write!(f, "Ann"),
            Player::Ben => write!(f, "Ben"),
        }
    }
}

/// Whether a position is decided, and otherwise who moves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Won(Player),
    Turn(Player),
}

/// A two-player perfect-information game with win/lose outcomes.
///
/// `legal_moves` must emit moves in a fixed ascending order and must be
/// nonempty whenever `status` says `Turn`; positions with no legal
/// continuation are the implementor's job to classify as `Won`.
pub trait Game {
    type State: Copy;
    type Key: Copy + Ord + Hash;
    type Move: Copy + Ord;

    fn initial(&self) -> Self::State;
    fn status(&self, state: &Self::State) -> Status;
    fn legal_moves(&self, state: &Self::State, out: &mut Vec<Self::Move>);
    fn apply(&self, state: &Self::State, mv: Self::Move) -> Self::State;
    /// Canonical memoization key; must determine the game's future entirely.
    fn key(&self, state: &Self::State) -> Self::Key;
}

/// Solved game: the winner under optimal play, the number of decision states
/// evaluated, and for every evaluated state the move chosen there.
#[derive(Clone, Debug, Serialize)]
pub struct GameOutcome<K, M> {
    pub winner: Player,
    pub explored: usize,
    /// `(state key, best move)` pairs sorted by key. For states won by the
    /// mover this is the first winning move in generation order; for lost
    /// states it is the first legal move.
    pub strategy: Vec<(K, M)>,
}

impl<K: Ord, M: Copy> GameOutcome<K, M> {
    pub fn best_move(&self, key: &K) -> Option<M> {
        self.strategy
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|ix| self.strategy[ix].1)
    }
}

/// Full minimax with memoization on canonical keys. Deterministic: identical
/// inputs give identical winners, strategies, and explored-state counts.
pub fn solve<G: Game>(game: &G) -> GameOutcome<G::Key, G::Move> {
    let mut memo: HashMap<G::Key, (Player, G::Move)> = HashMap::new();
    let winner = eval(game, game.initial(), &mut memo);
    let mut strategy: Vec<(G::Key, G::Move)> =
        memo.into_iter().map(|(k, (_, m))| (k, m)).collect();
    strategy.sort_unstable_by_key(|&(k, _)| k);
    GameOutcome { winner, explored: strategy.len(), strategy }
}

fn eval<G: Game>(
    game: &G,
    state: G::State,
    memo: &mut HashMap<G::Key, (Player, G::Move)>,
) -> Player {
    match game.status(&state) {
        Status::Won(p) => p,
        Status::Turn(mover) => {
            let key = game.key(&state);
            if let Some(&(winner, _)) = memo.get(&key) {
                return winner;
            }
            let mut moves = Vec::new();
            game.legal_moves(&state, &mut moves);
            debug_assert!(!moves.is_empty(), "Turn positions must offer a move");
            for &mv in &moves {
                if eval(game, game.apply(&state, mv), memo) == mover {
                    memo.insert(key, (mover, mv));
                    return mover;
                }
            }
            memo.insert(key, (mover.opponent(), moves[0]));
            mover.opponent()
        }
    }
}

/// Plays one game out: the declared winner follows the stored strategy, the
/// opponent picks uniformly random legal moves. Returns who actually won.
pub fn replay<G: Game, R: rand::Rng + ?Sized>(
    game: &G,
    outcome: &GameOutcome<G::Key, G::Move>,
    rng: &mut R,
) -> Player {
    let mut state = game.initial();
    loop {
        match game.status(&state) {
            Status::Won(p) => return p,
            Status::Turn(mover) => {
                let mv = if mover == outcome.winner {
                    outcome
                        .best_move(&game.key(&state))
                        .expect("strategy covers every reachable winner-to-move state")
                } else {
                    let mut moves = Vec::new();
                    game.legal_moves(&state, &mut moves);
                    moves[rng.random_range(0..moves.len())]
                };
                state = game.apply(&state, mv);
            }
        }
    }
}

/// Per-element colors packed four bits apiece: `0` is uncolored, colors are
/// `1..=t`. Canonical for the indicated and marking games.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize)]
pub struct ColorCode(pub u64);

impl ColorCode {
    pub fn color_of(self, e: usize) -> usize {
        (self.0 >> (4 * e) & 0xf) as usize
    }

    pub fn with_color(self, e: usize, color: usize) -> ColorCode {
        debug_assert!(color <= 0xf);
        ColorCode(self.0 & !(0xf << (4 * e)) | (color as u64) << (4 * e))
    }

    /// Bitmask of colored elements.
    pub fn colored_bits(self, n: usize) -> u64 {
        (0..n).filter(|&e| self.color_of(e) != 0).fold(0, |acc, e| acc | 1 << e)
    }

    /// Bitmask of the class of a 1-based color.
    pub fn class_bits(self, color: usize, n: usize) -> u64 {
        (0..n).filter(|&e| self.color_of(e) == color).fold(0, |acc, e| acc | 1 << e)
    }

    /// Per-element colors as a vector, for serialization and display.
    pub fn to_vec(self, n: usize) -> Vec<usize> {
        (0..n).map(|e| self.color_of(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_code_round_trip() {
        let c = ColorCode::default().with_color(0, 3).with_color(5, 1).with_color(2, 4);
        assert_eq!(c.color_of(0), 3);
        assert_eq!(c.color_of(2), 4);
        assert_eq!(c.color_of(5), 1);
        assert_eq!(c.color_of(1), 0);
        assert_eq!(c.colored_bits(6), 0b100101);
        assert_eq!(c.class_bits(4, 6), 0b100);
        assert_eq!(c.to_vec(6), vec![3, 0, 4, 0, 0, 1]);
        assert_eq!(c.with_color(0, 0).color_of(0), 0);
    }
}
