//! The maximal-matching game: two players alternately add edges to a
//! matching of a graph until it is maximal; Max wants the final matching
//! large, Min wants it small.
//!
//! The crate provides graphs on up to 62 vertices, graph6 I/O, canonical
//! certificates, matching numbers, an exact game solver, scripted
//! strategies, corpora and a registry of verification checks.

pub mod canon;
pub mod construct;
pub mod corpus;
pub mod game;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod play;
pub mod strategies;
pub mod verify;

pub use canon::{canonical_certificate, canonical_form, Certificate};
pub use game::{solve, solve_naive, Mode, Player, SolveError, SolveResult, Solver, SolverConfig};
pub use graph::{Edge, Graph, GraphError, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use matching::{matching_number, max_matching, min_maximal_matching, min_maximal_size, Matching};
pub use play::{play, GameState, Transcript};
pub use strategies::Strategy;

/// Tag stored with cached results; bump when solver semantics change.
pub const SOLVER_VERSION: &str = concat!("mg", env!("CARGO_PKG_VERSION"));
