//! Exact values of the matching game.
//!
//! Players alternately play an edge of the residual graph (deleting both of
//! its endpoints) until no edge is left. Max wants many moves, Min few. The
//! value of a position is 0 on an edgeless residual and otherwise the best
//! over moves `uv` of `1 + value(G - {u, v})` with the other player to move.
//!
//! Two memo keys are supported. [`Mode::Subset`] keys a position by the set
//! of surviving root vertices; the player to move follows from how many
//! vertices are gone. [`Mode::Iso`] keys by the canonical certificate of the
//! residual plus the player to move, which collapses symmetric positions and
//! lets one table serve many roots.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_certificate, Certificate};
use crate::graph::{bit, bits, full_mask, Edge, Graph};
use crate::matching::alpha_in;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Max,
    Min,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Max => Player::Min,
            Player::Min => Player::Max,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Max => "max",
            Player::Min => "min",
        })
    }
}

impl FromStr for Player {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Player::Max),
            "min" => Ok(Player::Min),
            _ => Err(format!("unknown player {s:?} (expected max or min)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Subset,
    Iso,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "subset" => Ok(Mode::Subset),
            "iso" => Ok(Mode::Iso),
            _ => Err(format!("unknown mode {s:?} (expected subset or iso)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Subset => "subset",
            Mode::Iso => "iso",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("memo budget of {budget} entries exhausted")]
    BudgetExceeded { budget: usize },
}

pub const DEFAULT_MEMO_BUDGET: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub mode: Mode,
    /// Skip moves whose matching-number bounds cannot beat the current best.
    pub prune: bool,
    pub memo_budget: usize,
    /// Worker threads for the first-move split; 1 keeps everything on the
    /// calling thread.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode: Mode::Subset,
            prune: false,
            memo_budget: DEFAULT_MEMO_BUDGET,
            threads: 1,
        }
    }
}

impl SolverConfig {
    pub fn with_mode(mode: Mode) -> Self {
        SolverConfig {
            mode,
            ..Default::default()
        }
    }
}

/// Game value plus every optimal first move, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub optimal_moves: Vec<Edge>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Subset(u64),
    Iso(Certificate, Player),
}

/// Concurrent value table with an entry cap. Values for a key are unique,
/// so racing inserts are harmless.
pub struct MemoTable {
    map: DashMap<MemoKey, u8>,
    entries: AtomicUsize,
    budget: usize,
}

impl MemoTable {
    pub fn new(budget: usize) -> Self {
        MemoTable {
            map: DashMap::new(),
            entries: AtomicUsize::new(0),
            budget,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.load(Ordering::Relaxed)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &MemoKey) -> Option<u8> {
        self.map.get(key).map(|v| *v)
    }

    fn insert(&self, key: MemoKey, value: u8) -> Result<(), SolveError> {
        match self.map.entry(key) {
            Entry::Occupied(o) => debug_assert_eq!(*o.get(), value),
            Entry::Vacant(slot) => {
                if self.entries.fetch_add(1, Ordering::Relaxed) >= self.budget {
                    self.entries.fetch_sub(1, Ordering::Relaxed);
                    return Err(SolveError::BudgetExceeded {
                        budget: self.budget,
                    });
                }
                slot.insert(value);
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MemoTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MemoTable")
            .field("entries", &self.len())
            .field("budget", &self.budget)
            .finish()
    }
}

/// Search over the positions reachable from one root graph.
///
/// Positions are addressed by the mask of surviving root vertices; the
/// player to move is derived from the number of moves already made.
pub struct GameTree {
    root: Graph,
    first: Player,
    config: SolverConfig,
    memo: Arc<MemoTable>,
    nodes: AtomicU64,
}

impl fmt::Debug for GameTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameTree")
            .field("root", &self.root)
            .field("first", &self.first)
            .field("config", &self.config)
            .finish()
    }
}

impl GameTree {
    pub fn new(root: &Graph, first: Player, config: &SolverConfig) -> Self {
        let memo = Arc::new(MemoTable::new(config.memo_budget));
        Self::with_memo(root, first, config, memo)
    }

    /// Shares `memo` with other trees. Only sound for [`Mode::Iso`], whose
    /// keys do not depend on the root.
    pub fn with_memo(root: &Graph, first: Player, config: &SolverConfig, memo: Arc<MemoTable>) -> Self {
        GameTree {
            root: root.clone(),
            first,
            config: config.clone(),
            memo,
            nodes: AtomicU64::new(0),
        }
    }

    pub fn root(&self) -> &Graph {
        &self.root
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.root.vertex_count())
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn nodes_visited(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn to_move(&self, mask: u64) -> Player {
        let removed = self.root.vertex_count() - mask.count_ones() as usize;
        if (removed / 2).is_multiple_of(2) {
            self.first
        } else {
            self.first.other()
        }
    }

    /// Moves available at `mask`, in lexicographic order.
    pub fn moves(&self, mask: u64) -> Vec<Edge> {
        let adj = self.root.adjacency();
        let mut out = Vec::new();
        for u in bits(mask) {
            for v in bits(adj[u] & mask & !full_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    fn key(&self, mask: u64) -> MemoKey {
        match self.config.mode {
            Mode::Subset => MemoKey::Subset(mask),
            Mode::Iso => MemoKey::Iso(
                canonical_certificate(&self.root.induced(mask)),
                self.to_move(mask),
            ),
        }
    }

    /// Game value at `mask` with [`GameTree::to_move`] moving.
    pub fn value_at(&self, mask: u64) -> Result<usize, SolveError> {
        self.value(mask).map(usize::from)
    }

    fn value(&self, mask: u64) -> Result<u8, SolveError> {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let moves = self.moves(mask);
        if moves.is_empty() {
            return Ok(0);
        }
        let key = self.key(mask);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v);
        }
        let adj = self.root.adjacency();
        let prune = self.config.prune;
        let best = match self.to_move(mask) {
            Player::Max => {
                let ceiling = if prune { alpha_in(adj, mask) as u8 } else { u8::MAX };
                let mut best = 0u8;
                for e in moves {
                    let child = mask & !e.mask();
                    if prune && (alpha_in(adj, child) as u8) < best {
                        continue;
                    }
                    best = best.max(1 + self.value(child)?);
                    if best == ceiling {
                        break;
                    }
                }
                best
            }
            Player::Min => {
                // a maximal matching has at least half the matching number
                let floor = if prune {
                    alpha_in(adj, mask).div_ceil(2) as u8
                } else {
                    0
                };
                let mut best = u8::MAX;
                for e in moves {
                    let child = mask & !e.mask();
                    if prune && 1 + alpha_in(adj, child).div_ceil(2) as u8 >= best {
                        continue;
                    }
                    best = best.min(1 + self.value(child)?);
                    if best == floor {
                        break;
                    }
                }
                best
            }
        };
        self.memo.insert(key, best)?;
        Ok(best)
    }

    /// Value and all optimal moves at `mask`, moves in root labels.
    pub fn result_at(&self, mask: u64) -> Result<SolveResult, SolveError> {
        let moves = self.moves(mask);
        let player = self.to_move(mask);
        let values = self.child_values(mask, &moves)?;
        let value = match player {
            Player::Max => values.iter().copied().max(),
            Player::Min => values.iter().copied().min(),
        }
        .unwrap_or(0);
        let optimal_moves = moves
            .iter()
            .zip(&values)
            .filter(|(_, &v)| v == value)
            .map(|(e, _)| *e)
            .collect();
        Ok(SolveResult {
            value,
            optimal_moves,
        })
    }

    /// `1 + value(child)` for every move, computed on up to
    /// `config.threads` threads sharing the memo.
    fn child_values(&self, mask: u64, moves: &[Edge]) -> Result<Vec<usize>, SolveError> {
        let eval = |e: &Edge| self.value(mask & !e.mask()).map(|v| 1 + v as usize);
        let threads = self.config.threads.clamp(1, moves.len().max(1));
        if threads == 1 {
            return moves.iter().map(eval).collect();
        }
        let next = AtomicUsize::new(0);
        let slots: Mutex<Vec<Option<Result<usize, SolveError>>>> = Mutex::new(vec![None; moves.len()]);
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= moves.len() {
                        break;
                    }
                    let r = eval(&moves[i]);
                    slots.lock().unwrap()[i] = Some(r);
                });
            }
        });
        slots
            .into_inner()
            .unwrap()
            .into_iter()
            .map(|r| r.expect("every move evaluated"))
            .collect()
    }

    /// Result at the root.
    pub fn solve(&self) -> Result<SolveResult, SolveError> {
        self.result_at(self.full_mask())
    }

    /// Root mask of the position left after playing `e` at `mask`.
    pub fn after(&self, mask: u64, e: Edge) -> u64 {
        debug_assert_eq!(mask & e.mask(), e.mask());
        mask & !(bit(e.u) | bit(e.v))
    }
}

/// Solver front end. In [`Mode::Iso`] the memo outlives single solves, so
/// repeated queries on related graphs reuse earlier work.
#[derive(Debug)]
pub struct Solver {
    config: SolverConfig,
    iso_memo: Arc<MemoTable>,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        let iso_memo = Arc::new(MemoTable::new(config.memo_budget));
        Solver { config, iso_memo }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn tree(&self, root: &Graph, first: Player) -> GameTree {
        match self.config.mode {
            Mode::Subset => GameTree::new(root, first, &self.config),
            Mode::Iso => GameTree::with_memo(root, first, &self.config, self.iso_memo.clone()),
        }
    }

    pub fn solve(&self, g: &Graph, first: Player) -> Result<SolveResult, SolveError> {
        self.tree(g, first).solve()
    }

    pub fn value(&self, g: &Graph, first: Player) -> Result<usize, SolveError> {
        let t = self.tree(g, first);
        t.value_at(t.full_mask())
    }

    /// `(Max(G), Min(G))`.
    pub fn values(&self, g: &Graph) -> Result<(usize, usize), SolveError> {
        Ok((self.value(g, Player::Max)?, self.value(g, Player::Min)?))
    }
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

pub fn solve(g: &Graph, first: Player, mode: Mode) -> Result<SolveResult, SolveError> {
    Solver::new(SolverConfig::with_mode(mode)).solve(g, first)
}

/// Plain minimax with no memo and no pruning; exponential, for checking.
pub fn solve_naive(g: &Graph, first: Player) -> usize {
    let edges = g.edges();
    let children = edges
        .iter()
        .map(|&e| 1 + solve_naive(&g.residual(e).expect("edge of g"), first.other()));
    match first {
        Player::Max => children.max(),
        Player::Min => children.min(),
    }
    .unwrap_or(0)
}
