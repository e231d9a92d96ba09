//! Playing a game between two strategies.
//!
//! Moves are always reported in root labels. The residual graph handed to
//! strategies is relabeled in increasing root order, so lexicographic order
//! of edges agrees between the two labelings.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::game::Player;
use crate::graph::{bit, Edge, Graph};
use crate::strategies::{Strategy, StrategyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub player: Player,
    pub edge: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub first: Player,
    pub moves: Vec<Move>,
    pub final_size: usize,
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moves.iter().enumerate() {
            writeln!(f, "{:>3}. {:<3} {}", i + 1, m.player, m.edge)?;
        }
        write!(f, "final size {}", self.final_size)
    }
}

#[derive(Debug, Error)]
pub enum PlayError {
    #[error("{strategy} ({player}) played illegal move {edge}; forfeit")]
    Illegal {
        strategy: String,
        player: Player,
        edge: Edge,
        partial: Transcript,
    },
    #[error("{strategy} ({player}) failed: {source}")]
    Strategy {
        strategy: String,
        player: Player,
        source: StrategyError,
        partial: Transcript,
    },
}

impl PlayError {
    /// Moves made before the game was aborted.
    pub fn partial(&self) -> &Transcript {
        match self {
            PlayError::Illegal { partial, .. } | PlayError::Strategy { partial, .. } => partial,
        }
    }
}

/// A position: the root graph, the surviving vertices and the history.
#[derive(Debug, Clone)]
pub struct GameState {
    root: Graph,
    alive: u64,
    residual: Graph,
    ids: Vec<usize>,
    first: Player,
    history: Vec<Move>,
}

impl GameState {
    pub fn new(root: &Graph, first: Player) -> Self {
        let alive = root.vertex_mask();
        GameState {
            root: root.clone(),
            alive,
            residual: root.clone(),
            ids: (0..root.vertex_count()).collect(),
            first,
            history: Vec::new(),
        }
    }

    pub fn root(&self) -> &Graph {
        &self.root
    }

    pub fn first(&self) -> Player {
        self.first
    }

    pub fn to_move(&self) -> Player {
        if self.history.len().is_multiple_of(2) {
            self.first
        } else {
            self.first.other()
        }
    }

    /// Root vertices not yet covered.
    pub fn alive(&self) -> u64 {
        self.alive
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive & bit(v) != 0
    }

    /// The residual graph with vertices renumbered `0..`; see
    /// [`GameState::root_id`].
    pub fn residual(&self) -> &Graph {
        &self.residual
    }

    /// Root label of residual vertex `i`.
    pub fn root_id(&self, i: usize) -> usize {
        self.ids[i]
    }

    pub fn root_ids(&self) -> &[usize] {
        &self.ids
    }

    /// Residual label of root vertex `v`, if it is still alive.
    pub fn residual_id(&self, v: usize) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn to_root(&self, e: Edge) -> Edge {
        Edge::new(self.ids[e.u], self.ids[e.v])
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    /// Playable edges in root labels, sorted.
    pub fn legal_edges(&self) -> Vec<Edge> {
        self.residual.edges().into_iter().map(|e| self.to_root(e)).collect()
    }

    pub fn least_legal(&self) -> Option<Edge> {
        self.residual.first_edge().map(|e| self.to_root(e))
    }

    pub fn is_legal(&self, e: Edge) -> bool {
        e.v < self.root.vertex_count()
            && self.root.contains(e)
            && self.alive & e.mask() == e.mask()
    }

    pub fn is_over(&self) -> bool {
        !self.residual.has_edges()
    }

    /// Plays `e` (root labels) for the player to move.
    pub fn apply(&mut self, e: Edge) -> Result<(), Edge> {
        if !self.is_legal(e) {
            return Err(e);
        }
        self.history.push(Move {
            player: self.to_move(),
            edge: e,
        });
        self.alive &= !e.mask();
        let (residual, ids) = self.root.induced_with_map(self.alive);
        self.residual = residual;
        self.ids = ids;
        Ok(())
    }

    pub fn transcript(&self) -> Transcript {
        Transcript {
            first: self.first,
            moves: self.history.clone(),
            final_size: self.history.len(),
        }
    }
}

/// Plays out the game on `g`. `max` and `min` are reset on the root before
/// the first move.
pub fn play(
    g: &Graph,
    first: Player,
    max: &mut dyn Strategy,
    min: &mut dyn Strategy,
) -> Result<Transcript, PlayError> {
    let mut state = GameState::new(g, first);
    for me in [Player::Max, Player::Min] {
        let s: &mut dyn Strategy = match me {
            Player::Max => &mut *max,
            Player::Min => &mut *min,
        };
        s.reset(g, me, first).map_err(|source| PlayError::Strategy {
            strategy: s.name().to_string(),
            player: me,
            source,
            partial: state.transcript(),
        })?;
    }
    while !state.is_over() {
        let player = state.to_move();
        let s: &mut dyn Strategy = match player {
            Player::Max => &mut *max,
            Player::Min => &mut *min,
        };
        let e = s.choose(&state).map_err(|source| PlayError::Strategy {
            strategy: s.name().to_string(),
            player,
            source,
            partial: state.transcript(),
        })?;
        state.apply(e).map_err(|edge| PlayError::Illegal {
            strategy: s.name().to_string(),
            player,
            edge,
            partial: state.transcript(),
        })?;
    }
    Ok(state.transcript())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle, path};
    use crate::matching::{is_maximal, Matching};
    use crate::strategies::{Exact, GreedyFirst};

    struct Fixed(Edge);

    impl Strategy for Fixed {
        fn name(&self) -> &str {
            "fixed"
        }
        fn choose(&mut self, _: &GameState) -> Result<Edge, StrategyError> {
            Ok(self.0)
        }
    }

    #[test]
    fn exact_play_on_small_graphs() {
        let t = play(&path(4).unwrap(), Player::Min, &mut Exact::default(), &mut Exact::default()).unwrap();
        assert_eq!(t.final_size, 1);
        let t = play(&cycle(6).unwrap(), Player::Max, &mut Exact::default(), &mut Exact::default()).unwrap();
        assert_eq!(t.final_size, 2);
        assert_eq!(t.moves[0].player, Player::Max);
        assert_eq!(t.moves[1].player, Player::Min);
    }

    #[test]
    fn edgeless_game_is_empty() {
        let t = play(&Graph::empty(3), Player::Max, &mut GreedyFirst, &mut GreedyFirst).unwrap();
        assert!(t.moves.is_empty());
    }

    #[test]
    fn transcript_is_a_maximal_matching() {
        let g = cycle(7).unwrap();
        let t = play(&g, Player::Max, &mut GreedyFirst, &mut GreedyFirst).unwrap();
        let m = Matching::new(&g, t.moves.iter().map(|m| m.edge).collect()).unwrap();
        assert!(is_maximal(&g, &m).unwrap());
        assert_eq!(t.final_size, 3);
    }

    #[test]
    fn illegal_move_forfeits() {
        let g = path(4).unwrap();
        let err = play(&g, Player::Max, &mut GreedyFirst, &mut Fixed(Edge::new(0, 1))).unwrap_err();
        match &err {
            PlayError::Illegal { strategy, player, edge, partial } => {
                assert_eq!((strategy.as_str(), *player, *edge), ("fixed", Player::Min, Edge::new(0, 1)));
                assert_eq!(partial.final_size, 1);
            }
            other => panic!("unexpected {other}"),
        }
        assert!(err.to_string().contains("fixed"));
    }

    #[test]
    fn residual_labels_translate() {
        let mut s = GameState::new(&path(5).unwrap(), Player::Max);
        s.apply(Edge::new(1, 2)).unwrap();
        assert_eq!(s.root_ids(), &[0, 3, 4]);
        assert_eq!(s.legal_edges(), vec![Edge::new(3, 4)]);
        assert_eq!(s.residual_id(3), Some(1));
        assert_eq!(s.residual_id(2), None);
        assert_eq!(s.to_move(), Player::Min);
        assert!(s.apply(Edge::new(0, 1)).is_err());
    }
}
