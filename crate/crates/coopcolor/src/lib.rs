//! Matroid partitioning, cooperative and list coloring, and exact solvers
//! for three matroid coloring games.
//!
//! The crate is organized around a single primitive: Edmonds-style matroid
//! partitioning by augmenting paths ([`partition`]). Everything else is
//! built on top of it or checks it:
//!
//! * [`matroid`] — independence oracles for uniform, graphic, partition, and
//!   linear matroids, plus restriction and pullback; greedy rank and
//!   fundamental circuits.
//! * [`partition`] — partition a ground set across a system of matroids or
//!   produce a deficiency certificate proving that no partition exists;
//!   union rank computed constructively and by the exhaustive min-formula.
//! * [`coloring`] — chromatic number two independent ways, k-colorability
//!   with certificates, cooperative and list coloring, and forest
//!   decompositions twisted by permutations.
//! * [`games`] — memoized minimax solvers for the indicated, marking, and
//!   painting games, a 2-covering construction, and a counterexample search
//!   for cooperative painting.
//! * [`exhaustive`] — naive brute-force oracles kept independent of the
//!   algorithms they validate.
//! * [`axioms`] — exhaustive matroid-axiom verification for small grounds.
//! * [`cli`] — the `coopcolor` command-line front end over JSON system
//!   files.
//!
//! Start with the runnable examples (`cargo run --example chromatic_number`
//! and friends) for a tour of the API.

pub mod axioms;
pub mod cli;
pub mod coloring;
pub mod corpus;
mod error;
pub mod exhaustive;
pub mod games;
pub mod matroid;
pub mod partition;
pub mod set;
mod union_find;

pub use error::Error;
pub use matroid::{Matroid, MatroidSpec};
pub use set::{GroundSet, Permutation, Subset};
pub use union_find::{is_forest, UnionFind};
