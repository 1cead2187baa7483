//! The indicated coloring game: Ann points at an uncolored element, Ben must
//! color it with some legal color (class stays independent in that color's
//! matroid). If the pointed element has no legal color Ben wins; when the
//! whole ground set is colored Ann wins.

use serde::Serialize;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

use super::{ColorCode, Game, Player, Status, GAME_MAX_GROUND, GAME_MAX_SLOTS};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct IndicatedState {
    pub colors: ColorCode,
    /// The element Ann pointed at, awaiting Ben's color; `None` on Ann's turn.
    pub pointed: Option<u8>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum IndicatedMove {
    /// Ann points at an uncolored element.
    Point(u8),
    /// Ben colors the pointed element with a 1-based color.
    Assign(u8),
}

pub struct IndicatedGame<'a> {
    matroids: &'a [Matroid],
    ground: GroundSet,
}

impl<'a> IndicatedGame<'a> {
    pub fn new(matroids: &'a [Matroid]) -> Result<IndicatedGame<'a>, Error> {
        let ground = common_ground(matroids)?;
        if ground.len() > GAME_MAX_GROUND || matroids.len() > GAME_MAX_SLOTS {
            return Err(Error::StateSpaceTooLarge(format!(
                "indicated game accepts at most {GAME_MAX_GROUND} elements and {GAME_MAX_SLOTS} matroids, got {} and {}",
                ground.len(),
                matroids.len()
            )));
        }
        Ok(IndicatedGame { matroids, ground })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
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
}

pub(super) fn common_ground(matroids: &[Matroid]) -> Result<GroundSet, Error> {
    let Some(first) = matroids.first() else {
        return Err(Error::Precondition("at least one matroid is required".into()));
    };
    for m in matroids {
        if m.ground() != first.ground() {
            return Err(Error::Precondition(
                "all matroids of a system must share one ground set".into(),
            ));
        }
    }
    Ok(first.ground())
}

impl Game for IndicatedGame<'_> {
    type State = IndicatedState;
    type Key = IndicatedState;
    type Move = IndicatedMove;

    fn initial(&self) -> IndicatedState {
        IndicatedState { colors: ColorCode::default(), pointed: None }
    }

    fn status(&self, state: &IndicatedState) -> Status {
        let n = self.ground.len();
        if state.colors.colored_bits(n) == self.ground.full().bits() {
            return Status::Won(Player::Ann);
        }
        match state.pointed {
            None => Status::Turn(Player::Ann),
            Some(e) => {
                let stuck = (1..=self.matroids.len())
                    .all(|c| !self.color_legal(state.colors, e as usize, c));
                if stuck {
                    Status::Won(Player::Ben)
                } else {
                    Status::Turn(Player::Ben)
                }
            }
        }
    }

    fn legal_moves(&self, state: &IndicatedState, out: &mut Vec<IndicatedMove>) {
        out.clear();
        let n = self.ground.len();
        match state.pointed {
            None => {
                let colored = state.colors.colored_bits(n);
                for e in 0..n {
                    if colored >> e & 1 == 0 {
                        out.push(IndicatedMove::Point(e as u8));
                    }
                }
            }
            Some(e) => {
                for c in 1..=self.matroids.len() {
                    if self.color_legal(state.colors, e as usize, c) {
                        out.push(IndicatedMove::Assign(c as u8));
                    }
                }
            }
        }
    }

    fn apply(&self, state: &IndicatedState, mv: IndicatedMove) -> IndicatedState {
        match mv {
            IndicatedMove::Point(e) => IndicatedState { colors: state.colors, pointed: Some(e) },
            IndicatedMove::Assign(c) => {
                let e = state.pointed.expect("Assign only answers a pointed element") as usize;
                IndicatedState {
                    colors: state.colors.with_color(e, c as usize),
                    pointed: None,
                }
            }
        }
    }

    fn key(&self, state: &IndicatedState) -> IndicatedState {
        *state
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{replay, solve};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_parallel_elements_two_colors_ann_wins() {
        let ms = vec![Matroid::uniform(2, 1).unwrap(), Matroid::uniform(2, 1).unwrap()];
        let game = IndicatedGame::new(&ms).unwrap();
        let outcome = solve(&game);
        assert_eq!(outcome.winner, Player::Ann);
    }

    #[test]
    fn free_matroid_alone_ann_wins() {
        let ms = vec![Matroid::free(3).unwrap()];
        let outcome = solve(&IndicatedGame::new(&ms).unwrap());
        assert_eq!(outcome.winner, Player::Ann);
    }

    #[test]
    fn one_color_short_ben_wins() {
        let ms = vec![Matroid::uniform(2, 1).unwrap()];
        let outcome = solve(&IndicatedGame::new(&ms).unwrap());
        assert_eq!(outcome.winner, Player::Ben);
    }

    #[test]
    fn deterministic_and_replayable() {
        let ms = vec![Matroid::uniform(3, 2).unwrap(), Matroid::uniform(3, 1).unwrap()];
        let game = IndicatedGame::new(&ms).unwrap();
        let a = solve(&game);
        let b = solve(&game);
        assert_eq!(a.winner, b.winner);
        assert_eq!(a.explored, b.explored);
        assert_eq!(a.strategy, b.strategy);

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            assert_eq!(replay(&game, &a, &mut rng), a.winner);
        }
    }

    #[test]
    fn guard_rejects_large_instances() {
        let ms = vec![Matroid::free(9).unwrap()];
        assert!(matches!(IndicatedGame::new(&ms), Err(Error::StateSpaceTooLarge(_))));
        let ms = vec![Matroid::free(2).unwrap(); 5];
        assert!(matches!(IndicatedGame::new(&ms), Err(Error::StateSpaceTooLarge(_))));
    }
}
