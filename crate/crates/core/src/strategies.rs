//! Scripted strategies: the move rules behind the value bounds, plus an
//! exact player and simple baselines.
//!
//! Every strategy answers in root labels. Whenever a rule leaves a choice
//! open the lexicographically least edge is taken.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::canonical_certificate;
use crate::construct::g_k;
use crate::game::{GameTree, Mode, Player, SolveError, SolverConfig};
use crate::graph::{bit, bits, Edge, Graph};
use crate::matching::{alpha_in, covering_max_matching, max_matching, min_maximal_matching};
use crate::play::GameState;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no legal move")]
    NoMove,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{0}")]
    Aborted(String),
}

fn precondition(msg: impl Into<String>) -> StrategyError {
    StrategyError::Precondition(msg.into())
}

pub trait Strategy {
    fn name(&self) -> &str;

    /// Called once per game before any move.
    fn reset(&mut self, _root: &Graph, _me: Player, _first: Player) -> Result<(), StrategyError> {
        Ok(())
    }

    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError>;
}

fn least(state: &GameState) -> Result<Edge, StrategyError> {
    state.least_legal().ok_or(StrategyError::NoMove)
}

/// Least playable edge among `candidates`.
fn least_playable(state: &GameState, candidates: impl IntoIterator<Item = Edge>) -> Option<Edge> {
    candidates.into_iter().filter(|&e| state.is_legal(e)).min()
}

/// The lexicographically least legal edge.
#[derive(Debug, Default, Clone)]
pub struct GreedyFirst;

impl Strategy for GreedyFirst {
    fn name(&self) -> &str {
        "greedy_first"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        least(state)
    }
}

/// A uniformly random legal edge. The generator is reseeded on every reset,
/// so each game is reproducible.
#[derive(Debug, Clone)]
pub struct RandomMove {
    seed: u64,
    rng: ChaCha8Rng,
    name: String,
}

impl RandomMove {
    pub fn new(seed: u64) -> Self {
        RandomMove {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
            name: format!("random:{seed}"),
        }
    }
}

impl Strategy for RandomMove {
    fn name(&self) -> &str {
        &self.name
    }
    fn reset(&mut self, _: &Graph, _: Player, _: Player) -> Result<(), StrategyError> {
        self.rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok(())
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        state
            .legal_edges()
            .choose(&mut self.rng)
            .copied()
            .ok_or(StrategyError::NoMove)
    }
}

/// Optimal play: the least optimal move, from a search tree kept for the
/// whole game.
#[derive(Debug)]
pub struct Exact {
    config: SolverConfig,
    tree: Option<GameTree>,
}

impl Exact {
    pub fn new(mode: Mode) -> Self {
        Exact {
            config: SolverConfig::with_mode(mode),
            tree: None,
        }
    }
}

impl Default for Exact {
    fn default() -> Self {
        Exact::new(Mode::Subset)
    }
}

impl Strategy for Exact {
    fn name(&self) -> &str {
        "exact"
    }
    fn reset(&mut self, root: &Graph, _: Player, first: Player) -> Result<(), StrategyError> {
        self.tree = Some(GameTree::new(root, first, &self.config));
        Ok(())
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        if self.tree.as_ref().map(|t| t.root()) != Some(state.root()) {
            self.tree = Some(GameTree::new(state.root(), state.first(), &self.config));
        }
        let tree = self.tree.as_ref().expect("tree initialized");
        let r = tree.result_at(state.alive())?;
        r.optimal_moves.first().copied().ok_or(StrategyError::NoMove)
    }
}

/// Edges `uv` of `g` inside `mask` with `α′(g[mask] - {u,v}) = α′(g[mask]) - 1`,
/// i.e. edges of some maximum matching.
fn max_matching_edges(g: &Graph, mask: u64) -> Vec<Edge> {
    let adj = g.adjacency();
    let alpha = alpha_in(adj, mask);
    let mut out = Vec::new();
    for u in bits(mask) {
        for v in bits(adj[u] & mask) {
            if u < v && alpha_in(adj, mask & !(bit(u) | bit(v))) + 1 == alpha {
                out.push(Edge { u, v });
            }
        }
    }
    out
}

/// Plays the least edge lying in some maximum matching of the residual.
#[derive(Debug, Default, Clone)]
pub struct MaxGreedyMatching;

impl Strategy for MaxGreedyMatching {
    fn name(&self) -> &str {
        "max_greedy_matching"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        max_matching_edges(state.root(), state.alive())
            .first()
            .copied()
            .ok_or(StrategyError::NoMove)
    }
}

/// Fixes a minimum maximal matching of the root and plays its edges while
/// any is available.
#[derive(Debug, Default, Clone)]
pub struct MinSmallMaximal {
    target: Vec<Edge>,
}

impl MinSmallMaximal {
    pub fn with_matching(edges: Vec<Edge>) -> Self {
        MinSmallMaximal { target: edges }
    }
}

impl Strategy for MinSmallMaximal {
    fn name(&self) -> &str {
        "min_small_maximal"
    }
    fn reset(&mut self, root: &Graph, _: Player, _: Player) -> Result<(), StrategyError> {
        if self.target.iter().any(|&e| !root.contains(e)) || self.target.is_empty() {
            self.target = min_maximal_matching(root).edges().to_vec();
        }
        Ok(())
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        match least_playable(state, self.target.iter().copied()) {
            Some(e) => Ok(e),
            None => least(state),
        }
    }
}

/// A split partition: `clique` induces a complete graph, `independent` an
/// edgeless one, and together they cover every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: u64,
    pub independent: u64,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let all = g.vertex_mask();
        if self.clique & self.independent != 0 || self.clique | self.independent != all {
            return false;
        }
        bits(self.clique).all(|v| g.neighbor_mask(v) & self.clique == self.clique & !bit(v))
            && bits(self.independent).all(|v| g.neighbor_mask(v) & self.independent == 0)
    }
}

/// A split partition of `g` with an inclusion-minimal clique side, or
/// `None` if `g` is not split. Uses the degree-sequence characterization:
/// with degrees `d1 ≥ … ≥ dn` and `m` the largest `i` with `di ≥ i - 1`, `g`
/// is split iff `Σ_{i≤m} di = m(m-1) + Σ_{i>m} di`, and then the `m` top
/// vertices form a clique.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    if top != m * m.saturating_sub(1) + rest {
        return None;
    }
    let mut p = SplitPartition {
        clique: order[..m].iter().fold(0, |acc, &v| acc | bit(v)),
        independent: order[m..].iter().fold(0, |acc, &v| acc | bit(v)),
    };
    debug_assert!(p.is_valid(g));
    // a clique vertex with no independent neighbour can switch sides
    while let Some(v) = bits(p.clique).find(|&v| g.neighbor_mask(v) & p.independent == 0) {
        p.clique &= !bit(v);
        p.independent |= bit(v);
    }
    Some(p)
}

/// On a split graph, plays inside the clique side while possible.
#[derive(Debug, Default, Clone)]
pub struct MinSplit {
    partition: Option<SplitPartition>,
}

impl MinSplit {
    pub fn with_partition(p: SplitPartition) -> Self {
        MinSplit { partition: Some(p) }
    }
}

impl Strategy for MinSplit {
    fn name(&self) -> &str {
        "min_split"
    }
    fn reset(&mut self, root: &Graph, _: Player, _: Player) -> Result<(), StrategyError> {
        match self.partition {
            Some(p) if p.is_valid(root) => Ok(()),
            Some(_) => Err(precondition("partition is not a split partition of the graph")),
            None => {
                self.partition =
                    Some(split_partition(root).ok_or_else(|| precondition("graph is not split"))?);
                Ok(())
            }
        }
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let clique = self.partition.ok_or_else(|| precondition("not reset"))?.clique & state.alive();
        let mut it = bits(clique);
        match (it.next(), it.next()) {
            (Some(u), Some(v)) => Ok(Edge { u, v }),
            _ => least(state),
        }
    }
}

/// On a forest: with `x, w, v` the start of a longest path, plays the edge
/// at `v` of a maximum matching of the forest minus `wv`. When every
/// component is a star, plays in a largest star.
#[derive(Debug, Default, Clone)]
pub struct MaxForest;

impl Strategy for MaxForest {
    fn name(&self) -> &str {
        "max_forest"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let f = state.residual();
        if !f.is_forest() {
            return Err(precondition("residual is not a forest"));
        }
        let path = f.longest_path_in_forest().expect("forest");
        if path.len() >= 4 {
            let (w, v) = (path[1], path[2]);
            let mut cut = f.clone();
            cut.remove_edge(w, v).expect("path edge");
            let m = covering_max_matching(&cut, v).expect("v keeps a neighbour on the path");
            let u = m.mate(v).expect("matching covers v");
            return Ok(state.to_root(Edge::new(u, v)));
        }
        // only stars remain: least edge of a star with the most edges
        let comps = f.components();
        let best = comps
            .iter()
            .filter(|c| c.len() >= 2)
            .max_by_key(|c| (c.len(), std::cmp::Reverse(f.edges_within(c).first().copied())))
            .ok_or(StrategyError::NoMove)?;
        let e = f.edges_within(best)[0];
        Ok(state.to_root(e))
    }
}

/// A designated `P4`: leaf, leaf neighbour, leaf neighbour, leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCopy(pub [usize; 4]);

impl PathCopy {
    pub fn central(&self) -> Edge {
        Edge::new(self.0[1], self.0[2])
    }
    pub fn leaf_edges(&self) -> [Edge; 2] {
        [Edge::new(self.0[0], self.0[1]), Edge::new(self.0[2], self.0[3])]
    }
    pub fn edges(&self) -> [Edge; 3] {
        let [a, b] = self.leaf_edges();
        [a, self.central(), b]
    }
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }
    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}

/// Splits a forest into `n/4` vertex-disjoint `P4`s whose ends are exactly
/// the leaves: the leaves must be half the vertices with distinct
/// neighbours, and those neighbours must have a perfect matching.
pub fn designated_copies(f: &Graph) -> Result<Vec<PathCopy>, StrategyError> {
    let n = f.vertex_count();
    if !f.is_forest() {
        return Err(precondition("graph is not a forest"));
    }
    if n == 0 || !n.is_multiple_of(8) {
        return Err(precondition("vertex count must be a positive multiple of 8"));
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| f.degree(v) == 1).collect();
    if leaves.len() != n / 2 {
        return Err(precondition("leaves must be exactly half the vertices"));
    }
    let mut anchor = vec![usize::MAX; n];
    let mut inner = 0u64;
    for &l in &leaves {
        let a = f.neighbors(l).next().expect("leaf has a neighbour");
        if f.degree(a) == 1 || anchor[a] != usize::MAX {
            return Err(precondition("leaf neighbours must be distinct non-leaves"));
        }
        anchor[a] = l;
        inner |= bit(a);
    }
    let (sub, ids) = f.induced_with_map(inner);
    let m = max_matching(&sub);
    if 2 * m.size() != sub.vertex_count() {
        return Err(precondition("leaf neighbours have no perfect matching"));
    }
    Ok(m.edges()
        .iter()
        .map(|e| {
            let (a, b) = (ids[e.u], ids[e.v]);
            PathCopy([anchor[a], a, b, anchor[b]])
        })
        .collect())
}

/// Min's response rule on forests covered by designated `P4`s.
///
/// After a Max move inside one copy, Min plays the central edge of another
/// untouched copy. After a Max move joining two copies, Min plays a leaf
/// edge in one of them. Unavailable choices fall back to an edge inside an
/// untouched copy, then to any edge.
#[derive(Debug, Default, Clone)]
pub struct MinComb {
    copies: Vec<PathCopy>,
}

impl MinComb {
    pub fn copies(&self) -> &[PathCopy] {
        &self.copies
    }

    fn untouched<'a>(&'a self, state: &'a GameState) -> impl Iterator<Item = &'a PathCopy> + 'a {
        self.copies
            .iter()
            .filter(move |c| c.mask() & state.alive() == c.mask())
    }

    fn copy_of(&self, v: usize) -> Option<usize> {
        self.copies.iter().position(|c| c.contains(v))
    }
}

impl Strategy for MinComb {
    fn name(&self) -> &str {
        "min_comb"
    }
    fn reset(&mut self, root: &Graph, _: Player, _: Player) -> Result<(), StrategyError> {
        self.copies = designated_copies(root)?;
        Ok(())
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let last = state.history().last().filter(|m| m.player != state.to_move());
        let preferred = match last.map(|m| m.edge) {
            None => self.untouched(state).map(|c| c.central()).next(),
            Some(e) => {
                let (cu, cv) = (self.copy_of(e.u), self.copy_of(e.v));
                if cu == cv {
                    self.untouched(state).map(|c| c.central()).next()
                } else {
                    let touched = [cu, cv].into_iter().flatten().map(|i| self.copies[i]);
                    least_playable(state, touched.flat_map(|c| c.leaf_edges()))
                }
            }
        };
        if let Some(e) = preferred.filter(|&e| state.is_legal(e)) {
            return Ok(e);
        }
        match least_playable(state, self.untouched(state).flat_map(|c| c.edges())) {
            Some(e) => Ok(e),
            None => least(state),
        }
    }
}

fn longest_path(state: &GameState) -> Result<Vec<usize>, StrategyError> {
    let r = state.residual();
    if !r.is_linear_forest() {
        return Err(precondition("residual is not a union of paths"));
    }
    Ok(r.longest_path_in_forest().expect("linear forest"))
}

/// On unions of paths, plays the second edge of a longest path.
#[derive(Debug, Default, Clone)]
pub struct MinPath;

impl Strategy for MinPath {
    fn name(&self) -> &str {
        "min_path"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let p = longest_path(state)?;
        if p.len() >= 3 {
            Ok(state.to_root(Edge::new(p[1], p[2])))
        } else {
            least(state)
        }
    }
}

/// On unions of paths, plays the third edge of a longest path, or an edge
/// of a longest path when all paths are short.
#[derive(Debug, Default, Clone)]
pub struct MaxPath;

impl Strategy for MaxPath {
    fn name(&self) -> &str {
        "max_path"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let p = longest_path(state)?;
        match p.len() {
            0 | 1 => Err(StrategyError::NoMove),
            2 | 3 => {
                let e = p.windows(2).map(|w| Edge::new(w[0], w[1])).min().unwrap();
                Ok(state.to_root(e))
            }
            _ => Ok(state.to_root(Edge::new(p[2], p[3]))),
        }
    }
}

/// After an arbitrary first move, plays at a vertex of smallest nonzero
/// degree.
#[derive(Debug, Default, Clone)]
pub struct MaxMinDegree;

impl Strategy for MaxMinDegree {
    fn name(&self) -> &str {
        "max_mindeg"
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let me = state.to_move();
        if state.history().iter().all(|m| m.player != me) {
            return least(state);
        }
        let r = state.residual();
        let d = (0..r.vertex_count())
            .map(|v| r.degree(v))
            .filter(|&d| d > 0)
            .min()
            .ok_or(StrategyError::NoMove)?;
        let e = r
            .edges()
            .into_iter()
            .find(|e| r.degree(e.u) == d || r.degree(e.v) == d)
            .expect("a vertex of degree d has an edge");
        Ok(state.to_root(e))
    }
}

/// One copy of the 6-vertex graph `B` inside `G_k`: a copy of `K` (the
/// core) plus the pendant vertex on its subdivision vertex. Pendant vertices
/// are tree vertices and may be shared between copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCopy {
    pub core: u64,
    pub pendant: usize,
    /// The three edges of the copy lying in no perfect matching of it.
    pub f_edges: Vec<Edge>,
}

impl GadgetCopy {
    pub fn vertices(&self) -> u64 {
        self.core | bit(self.pendant)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.vertices() & e.mask() == e.mask()
    }

    /// No vertex of the core has been covered.
    pub fn untouched(&self, alive: u64) -> bool {
        self.core & alive == self.core
    }
}

/// Edges of `g` that lie in no perfect matching of `g`.
pub fn edges_in_no_perfect_matching(g: &Graph) -> Vec<Edge> {
    fn perfect(g: &Graph, mask: u64, chosen: &mut Vec<Edge>, used: &mut u64) {
        let Some(u) = bits(mask).next() else {
            for e in chosen.iter() {
                *used |= 1 << edge_index(g, *e);
            }
            return;
        };
        for v in bits(g.neighbor_mask(u) & mask) {
            chosen.push(Edge::new(u, v));
            perfect(g, mask & !(bit(u) | bit(v)), chosen, used);
            chosen.pop();
        }
    }
    fn edge_index(g: &Graph, e: Edge) -> usize {
        g.edges().binary_search(&e).expect("edge of g")
    }
    assert!(g.edge_count() <= 64);
    let mut used = 0u64;
    perfect(g, g.vertex_mask(), &mut Vec::new(), &mut used);
    g.edges()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| used >> i & 1 == 0)
        .map(|(_, e)| e)
        .collect()
}

/// Finds the copies of `B` in `G_k`: each 4-vertex group joined by
/// triangles, its subdivision vertex and that vertex's outside neighbour.
pub fn gadget_copies(g: &Graph) -> Result<Vec<GadgetCopy>, StrategyError> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut tri = Graph::empty(n);
    for e in g.edges() {
        if adj[e.u] & adj[e.v] != 0 {
            tri.add_edge(e.u, e.v).expect("in range");
        }
    }
    let mut copies = Vec::new();
    for group in tri.component_masks() {
        if group.count_ones() == 1 {
            continue;
        }
        if group.count_ones() != 4 {
            return Err(precondition("triangle group is not a copy of K minus its subdivision vertex"));
        }
        let s = (0..n)
            .find(|&v| group & bit(v) == 0 && (adj[v] & group).count_ones() == 2)
            .ok_or_else(|| precondition("no subdivision vertex"))?;
        let p = bits(adj[s] & !group)
            .next()
            .ok_or_else(|| precondition("subdivision vertex has no outside neighbour"))?;
        let core = group | bit(s);
        let (b, ids) = g.induced_with_map(core | bit(p));
        let f_edges = edges_in_no_perfect_matching(&b)
            .into_iter()
            .map(|e| Edge::new(ids[e.u], ids[e.v]))
            .collect::<Vec<_>>();
        if f_edges.len() != 3 {
            return Err(precondition("copy of B does not have three forced-out edges"));
        }
        copies.push(GadgetCopy { core, pendant: p, f_edges });
    }
    Ok(copies)
}

/// Min's rule on `G_k`: answer inside a copy of `B` that Max just opened
/// with an edge of its `F`, else open a fresh copy with an `F` edge, else
/// play anything.
#[derive(Debug, Default, Clone)]
pub struct MinGk {
    copies: Vec<GadgetCopy>,
}

impl MinGk {
    pub fn copies(&self) -> &[GadgetCopy] {
        &self.copies
    }
}

/// `k` with `g ≅ G_k`, for the orders that fit.
fn gk_index(g: &Graph) -> Option<usize> {
    (0..=1).find(|&k| {
        g.vertex_count() == 18 * (1 << k) - 2
            && g.regular_degree() == Some(3)
            && g.is_connected()
            && canonical_certificate(g) == canonical_certificate(&g_k(k).expect("small k"))
    })
}

impl Strategy for MinGk {
    fn name(&self) -> &str {
        "min_gk"
    }
    fn reset(&mut self, root: &Graph, _: Player, _: Player) -> Result<(), StrategyError> {
        let k = gk_index(root).ok_or_else(|| precondition("graph is not G_0 or G_1"))?;
        self.copies = gadget_copies(root)?;
        if self.copies.len() != 3 << k {
            return Err(precondition("wrong number of gadget copies"));
        }
        Ok(())
    }
    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        let alive = state.alive();
        let last = state.history().last().filter(|m| m.player != state.to_move());
        if let Some(m) = last {
            let before = alive | m.edge.mask();
            // the copy containing Max's edge, if that edge opened it
            let opened = self
                .copies
                .iter()
                .filter(|c| c.contains_edge(m.edge) && c.untouched(before));
            if let Some(e) = least_playable(state, opened.flat_map(|c| c.f_edges.iter().copied())) {
                return Ok(e);
            }
        }
        for c in self.copies.iter().filter(|c| c.untouched(alive)) {
            if let Some(e) = least_playable(state, c.f_edges.iter().copied()) {
                return Ok(e);
            }
        }
        least(state)
    }
}

/// Stable ids accepted by [`by_name`]; `random` also accepts `random:SEED`.
pub const STRATEGY_NAMES: &[&str] = &[
    "exact",
    "random",
    "greedy_first",
    "max_greedy_matching",
    "min_small_maximal",
    "min_split",
    "max_forest",
    "min_comb",
    "min_path",
    "max_path",
    "max_mindeg",
    "min_gk",
];

/// Builds a strategy by id. `seed` feeds `random` unless the id carries
/// its own seed.
pub fn by_name(name: &str, seed: u64) -> Result<Box<dyn Strategy + Send>, StrategyError> {
    Ok(match name {
        "exact" => Box::new(Exact::default()),
        "exact_iso" => Box::new(Exact::new(Mode::Iso)),
        "random" => Box::new(RandomMove::new(seed)),
        "greedy_first" => Box::new(GreedyFirst),
        "max_greedy_matching" => Box::new(MaxGreedyMatching),
        "min_small_maximal" => Box::new(MinSmallMaximal::default()),
        "min_split" => Box::new(MinSplit::default()),
        "max_forest" => Box::new(MaxForest),
        "min_comb" => Box::new(MinComb::default()),
        "min_path" => Box::new(MinPath),
        "max_path" => Box::new(MaxPath),
        "max_mindeg" => Box::new(MaxMinDegree),
        "min_gk" => Box::new(MinGk::default()),
        other => match other.strip_prefix("random:").map(str::parse::<u64>) {
            Some(Ok(s)) => Box::new(RandomMove::new(s)),
            _ => {
                return Err(precondition(format!(
                    "unknown strategy {other:?}; available: {}",
                    STRATEGY_NAMES.join(", ")
                )))
            }
        },
    })
}
