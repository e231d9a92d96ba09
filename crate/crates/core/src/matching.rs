//! Classical matching quantities: the matching number, the minimum size of
//! a maximal matching, maximality tests, and the search for a maximum
//! matching whose edges are pairwise "compatible".

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{bit, bits, Edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("edges {0} and {1} share a vertex")]
    Overlap(Edge, Edge),
    #[error("vertex {0} is isolated")]
    Isolated(usize),
}

/// A set of pairwise disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
    covered: u64,
}

impl Matching {
    /// Validates `edges` as a matching of `g`.
    pub fn new(g: &Graph, mut edges: Vec<Edge>) -> Result<Self, MatchingError> {
        edges.sort();
        let mut covered = 0u64;
        for (i, e) in edges.iter().enumerate() {
            if !g.contains(*e) {
                return Err(MatchingError::MissingEdge(*e));
            }
            if covered & e.mask() != 0 {
                let other = edges[..i].iter().find(|f| !f.disjoint(e)).unwrap();
                return Err(MatchingError::Overlap(*other, *e));
            }
            covered |= e.mask();
        }
        Ok(Matching { edges, covered })
    }

    fn from_trusted(mut edges: Vec<Edge>) -> Self {
        edges.sort();
        let covered = edges.iter().fold(0, |m, e| m | e.mask());
        Matching { edges, covered }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn covered(&self) -> u64 {
        self.covered
    }

    pub fn covers(&self, v: usize) -> bool {
        self.covered & bit(v) != 0
    }

    /// Partner of `v`, if matched.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|e| {
            if e.u == v {
                Some(e.v)
            } else if e.v == v {
                Some(e.u)
            } else {
                None
            }
        })
    }
}

// --------------------------------------------------------------- blossom

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm on the subgraph induced by `mask`.
/// Returns the mate array (NONE for exposed vertices).
fn blossom_mates(adj: &[u64], mask: u64) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for v in bits(mask) {
        if mate[v] == NONE {
            if let Some(u) = bits(adj[v] & mask).find(|&u| mate[u] == NONE) {
                mate[v] = u;
                mate[u] = v;
            }
        }
    }
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut in_blossom = vec![false; n];

    let lca = |mut a: usize, mut b: usize, mate: &[usize], parent: &[usize], base: &[usize]| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    for root in bits(mask) {
        if mate[root] != NONE {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = NONE);
        used.iter_mut().for_each(|u| *u = false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut found = NONE;
        'bfs: while let Some(v) = queue.pop_front() {
            for to in bits(adj[v] & mask) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(v, to, &mate, &parent, &base);
                    in_blossom.iter_mut().for_each(|b| *b = false);
                    let mut mark = |mut x: usize, mut child: usize, parent: &mut [usize]| {
                        while base[x] != cur {
                            in_blossom[base[x]] = true;
                            in_blossom[base[mate[x]]] = true;
                            parent[x] = child;
                            child = mate[x];
                            x = parent[mate[x]];
                        }
                    };
                    mark(v, to, &mut parent);
                    mark(to, v, &mut parent);
                    for i in bits(mask) {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        found = to;
                        break 'bfs;
                    }
                    let next = mate[to];
                    used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        let mut v = found;
        while v != NONE {
            let pv = parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
    mate
}

fn mates_to_edges(mate: &[usize]) -> Vec<Edge> {
    mate.iter()
        .enumerate()
        .filter(|&(v, &u)| u != NONE && v < u)
        .map(|(v, &u)| Edge::new(v, u))
        .collect()
}

/// Matching number of the subgraph induced by `mask`.
pub(crate) fn alpha_in(adj: &[u64], mask: u64) -> usize {
    blossom_mates(adj, mask)
        .iter()
        .filter(|&&u| u != NONE)
        .count()
        / 2
}

/// A maximum matching; its size is the matching number.
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_trusted(mates_to_edges(&blossom_mates(
        g.adjacency(),
        g.vertex_mask(),
    )))
}

pub fn matching_number(g: &Graph) -> usize {
    alpha_in(g.adjacency(), g.vertex_mask())
}

/// True iff no edge of `g` avoids the vertices covered by `m`.
pub fn is_maximal(g: &Graph, m: &Matching) -> Result<bool, MatchingError> {
    Matching::new(g, m.edges.clone())?;
    let free = g.vertex_mask() & !m.covered;
    Ok(bits(free).all(|v| g.neighbor_mask(v) & free == 0))
}

/// A maximum matching containing an edge at `v`; the partner is the least
/// neighbour that admits one.
pub fn covering_max_matching(g: &Graph, v: usize) -> Result<Matching, MatchingError> {
    if v >= g.vertex_count() || g.degree(v) == 0 {
        return Err(MatchingError::Isolated(v));
    }
    let adj = g.adjacency();
    let all = g.vertex_mask();
    let target = alpha_in(adj, all);
    for u in g.neighbors(v) {
        let rest = all & !bit(u) & !bit(v);
        let mates = blossom_mates(adj, rest);
        let mut edges = mates_to_edges(&mates);
        if edges.len() + 1 == target {
            edges.push(Edge::new(u, v));
            return Ok(Matching::from_trusted(edges));
        }
    }
    unreachable!("some maximum matching covers every non-isolated vertex")
}

// ------------------------------------------------- minimum maximal matching

struct MinMaximal<'a> {
    adj: &'a [u64],
    current: Vec<Edge>,
    best: Vec<Edge>,
    /// Size to beat; starts one above the greedy matching.
    bound: usize,
}

impl MinMaximal<'_> {
    /// `rem`: undecided vertices. `must`: vertices that have to be matched
    /// inside `rem` because a neighbour was left exposed.
    fn search(&mut self, mut rem: u64, must: u64) {
        loop {
            let lonely = bits(rem).find(|&v| self.adj[v] & rem == 0);
            match lonely {
                Some(v) if must & bit(v) != 0 => return,
                Some(v) => rem &= !bit(v),
                None => break,
            }
        }
        if rem == 0 {
            if self.current.len() < self.bound {
                self.best = self.current.clone();
                self.bound = self.best.len();
            }
            return;
        }
        // any maximal completion is maximal in G[rem], so at least half its matching number
        let lower = self.current.len() + alpha_in(self.adj, rem).div_ceil(2);
        if lower >= self.bound {
            return;
        }
        let v = bits(rem)
            .min_by_key(|&v| ((self.adj[v] & rem).count_ones(), v))
            .unwrap();
        for u in bits(self.adj[v] & rem) {
            self.current.push(Edge::new(u, v));
            let gone = bit(u) | bit(v);
            self.search(rem & !gone, must & !gone);
            self.current.pop();
        }
        if must & bit(v) == 0 {
            self.search(rem & !bit(v), must | (self.adj[v] & rem));
        }
    }
}

fn greedy_maximal(g: &Graph) -> Vec<Edge> {
    let mut covered = 0u64;
    let mut out = Vec::new();
    for e in g.edges() {
        if covered & e.mask() == 0 {
            covered |= e.mask();
            out.push(e);
        }
    }
    out
}

/// A maximal matching of minimum size.
pub fn min_maximal_matching(g: &Graph) -> Matching {
    let greedy = greedy_maximal(g);
    let mut s = MinMaximal {
        adj: g.adjacency(),
        current: Vec::new(),
        bound: greedy.len() + 1,
        best: greedy,
    };
    s.search(g.vertex_mask(), 0);
    Matching::from_trusted(s.best)
}

pub fn min_maximal_size(g: &Graph) -> usize {
    min_maximal_matching(g).size()
}

// ------------------------------------------------ compatibility witnesses

/// Outcome of the witness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Found(Matching),
    Absent,
    /// The enumeration cap was reached first.
    Inconclusive,
}

pub const WITNESS_ENUMERATION_CAP: usize = 1_000_000;

/// Whether `m` satisfies: `uv` an edge with `uu'`, `vv'` in `m` forces `u'v'`
/// to be an edge.
pub fn is_compatible(g: &Graph, m: &Matching) -> bool {
    let edges = m.edges();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            for (u, u2) in [(a.u, a.v), (a.v, a.u)] {
                for (v, v2) in [(b.u, b.v), (b.v, b.u)] {
                    if g.has_edge(u, v) && !g.has_edge(u2, v2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct WitnessSearch<'a> {
    g: &'a Graph,
    target: usize,
    current: Vec<Edge>,
    visited: usize,
    cap: usize,
}

enum Step {
    Continue,
    Found(Matching),
    Capped,
}

impl WitnessSearch<'_> {
    fn search(&mut self, rem: u64) -> Step {
        let adj = self.g.adjacency();
        if self.current.len() == self.target {
            self.visited += 1;
            let m = Matching::from_trusted(self.current.clone());
            if is_compatible(self.g, &m) {
                return Step::Found(m);
            }
            return if self.visited >= self.cap {
                Step::Capped
            } else {
                Step::Continue
            };
        }
        if self.current.len() + alpha_in(adj, rem) < self.target {
            return Step::Continue;
        }
        let Some(v) = bits(rem).find(|&v| adj[v] & rem != 0) else {
            return Step::Continue;
        };
        for u in bits(adj[v] & rem) {
            self.current.push(Edge::new(u, v));
            let step = self.search(rem & !bit(u) & !bit(v));
            self.current.pop();
            if !matches!(step, Step::Continue) {
                return step;
            }
        }
        self.search(rem & !bit(v))
    }
}

/// Searches all maximum matchings for one satisfying [`is_compatible`].
pub fn compatible_witness(g: &Graph) -> Witness {
    witness_with_cap(g, WITNESS_ENUMERATION_CAP)
}

pub fn witness_with_cap(g: &Graph, cap: usize) -> Witness {
    let mut s = WitnessSearch {
        g,
        target: matching_number(g),
        current: Vec::new(),
        visited: 0,
        cap,
    };
    match s.search(g.vertex_mask()) {
        Step::Found(m) => Witness::Found(m),
        Step::Continue => Witness::Absent,
        Step::Capped => Witness::Inconclusive,
    }
}
