//! The marking (game) coloring: players alternate, each move picks an
//! uncolored element and a legal color for it. Ann wins iff the whole ground
//! set ends up colored; a position with uncolored elements and no legal move
//! is therefore a Ben win, no matter whose turn it is.

use serde::Serialize;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

use super::indicated::common_ground;
use super::{ColorCode, Game, Player, Status, GAME_MAX_GROUND, GAME_MAX_SLOTS};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct MarkingState {
    pub colors: ColorCode,
    pub to_move: Player,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct MarkingMove {
    pub element: u8,
    /// 1-based color.
    pub color: u8,
}

pub struct MarkingGame<'a> {
    matroids: &'a [Matroid],
    ground: GroundSet,
    first: Player,
}

impl<'a> MarkingGame<'a> {
    pub fn new(matroids: &'a [Matroid], first: Player) -> Result<MarkingGame<'a>, Error> {
        let ground = common_ground(matroids)?;
        if ground.len() > GAME_MAX_GROUND || matroids.len() > GAME_MAX_SLOTS {
            return Err(Error::StateSpaceTooLarge(format!(
                "marking game accepts at most {GAME_MAX_GROUND} elements and {GAME_MAX_SLOTS} matroids, got {} and {}",
                ground.len(),
                matroids.len()
            )));
        }
        Ok(MarkingGame { matroids, ground, first })
    }

    fn color_legal(&self, colors: ColorCode, e: usize, color: usize) -> bool {
        let m = &self.matroids[color - 1];
        if !m.admissible().contains(e) {
            return false;
        }
        let class = colors.class_bits(color, self.ground.len()) | 1 << e;
        m.is_independent(Subset::from_bits(self.ground, class))
            .expect("color classes stay within admissible domains")
    }

    fn any_move(&self, colors: ColorCode) -> bool {
        let n = self.ground.len();
        let colored = colors.colored_bits(n);
        (0..n).any(|e| {
            colored >> e & 1 == 0
                && (1..=self.matroids.len()).any(|c| self.color_legal(colors, e, c))
        })
    }
}

impl Game for MarkingGame<'_> {
    type State = MarkingState;
    type Key = MarkingState;
    type Move = MarkingMove;

    fn initial(&self) -> MarkingState {
        MarkingState { colors: ColorCode::default(), to_move: self.first }
    }

    fn status(&self, state: &MarkingState) -> Status {
        let n = self.ground.len();
        if state.colors.colored_bits(n) == self.ground.full().bits() {
            return Status::Won(Player::Ann);
        }
        if !self.any_move(state.colors) {
            return Status::Won(Player::Ben);
        }
        Status::Turn(state.to_move)
    }

    fn legal_moves(&self, state: &MarkingState, out: &mut Vec<MarkingMove>) {
        out.clear();
        let n = self.ground.len();
        let colored = state.colors.colored_bits(n);
        for e in 0..n {
            if colored >> e & 1 == 1 {
                continue;
            }
            for c in 1..=self.matroids.len() {
                if self.color_legal(state.colors, e, c) {
                    out.push(MarkingMove { element: e as u8, color: c as u8 });
                }
            }
        }
    }

    fn apply(&self, state: &MarkingState, mv: MarkingMove) -> MarkingState {
        MarkingState {
            colors: state.colors.with_color(mv.element as usize, mv.color as usize),
            to_move: state.to_move.opponent(),
        }
    }

    fn key(&self, state: &MarkingState) -> MarkingState {
        *state
    }
}
