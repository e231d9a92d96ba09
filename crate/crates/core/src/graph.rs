//! Simple undirected graphs on at most 62 vertices.
//!
//! Vertices are the ids `0..n`. Each vertex stores its neighbourhood as a
//! `u64` bitset, so neighbourhood intersection and induced subgraphs are
//! word operations. Every deletion relabels the surviving vertices to
//! `0..n'` preserving their relative order.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest vertex count representable (graph6 single-byte header limit).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// An edge `uv` with `u < v`. Ordered lexicographically by `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge::new(a, b))
    }

    pub fn mask(&self) -> u64 {
        bit(self.u) | bit(self.v)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn disjoint(&self, other: &Edge) -> bool {
        self.mask() & other.mask() == 0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Labeled simple graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Edgeless graph; panics above the vertex cap.
    pub fn empty(n: usize) -> Self {
        Graph::new(n).expect("vertex count within cap")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, symmetrizing nothing: the
    /// caller guarantees a symmetric, loop-free relation on `0..rows.len()`.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|v| {
            self.adj[v] & !all == 0
                && self.adj[v] & bit(v) == 0
                && bits(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = self.adj[u] & bit(v) == 0;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(fresh)
    }

    /// Adds a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Result<usize, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.adj[u] & bit(v) == 0 {
            return Err(GraphError::EdgeAbsent(Edge::try_new(u, v)?));
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&a| a != 0)
    }

    /// Least edge in lexicographic order, if any.
    pub fn first_edge(&self) -> Option<Edge> {
        (0..self.n).find_map(|u| {
            let up = self.adj[u] & !full_mask(u + 1);
            (up != 0).then(|| Edge {
                u,
                v: up.trailing_zeros() as usize,
            })
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn isolated_mask(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |m, v| m | bit(v))
    }

    /// Induced subgraph on `keep`, relabeled in increasing id order.
    /// Also returns the old id of each new vertex.
    pub fn induced_with_map(&self, keep: u64) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = bits(keep).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |m, u| m | bit(pos[u])))
            .collect();
        (Graph::from_adjacency(adj), old)
    }

    pub fn induced(&self, keep: u64) -> Graph {
        self.induced_with_map(keep).0
    }

    /// Graph left after deleting both endpoints of the played edge `e`.
    pub fn residual(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::EdgeAbsent(e));
        }
        Ok(self.induced(self.vertex_mask() & !e.mask()))
    }

    /// Deletes the vertex set `s`; the rest is relabeled in order.
    pub fn induced_delete(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut drop = 0u64;
        for &v in s {
            self.check_vertex(v)?;
            drop |= bit(v);
        }
        Ok(self.induced(self.vertex_mask() & !drop))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.induced_delete(&[v])
    }

    pub fn without_isolated(&self) -> Graph {
        self.induced(self.vertex_mask() & !self.isolated_mask())
    }

    /// Applies `perm`, where `perm[v]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0u64, |m, u| m | bit(perm[u]));
        }
        Graph::from_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |m, v| m | self.adj[v]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach(v, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_masks().len() == self.n
    }

    /// Whether every component is a path (or an isolated vertex).
    pub fn is_linear_forest(&self) -> bool {
        self.max_degree() <= 2 && self.is_forest()
    }

    /// True iff `comp` spans a K1, K2 or K_{1,t}.
    /// Edges with both ends in `vs`, sorted.
    pub fn edges_within(&self, vs: &[usize]) -> Vec<Edge> {
        let mask = vs.iter().fold(0u64, |m, &v| m | bit(v));
        self.edges()
            .into_iter()
            .filter(|e| e.mask() & mask == e.mask())
            .collect()
    }

    pub fn is_star(&self, comp: &[usize]) -> bool {
        let mask = comp.iter().fold(0u64, |m, &v| m | bit(v));
        let edges: usize = comp
            .iter()
            .map(|&v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2;
        if edges + 1 != comp.len() {
            return false;
        }
        comp.len() <= 2
            || comp
                .iter()
                .any(|&v| (self.adj[v] & mask).count_ones() as usize == comp.len() - 1)
    }

    fn bfs_dist(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            let d = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    q.push_back(u);
                }
            }
        }
        dist
    }

    /// Path between `a` and `b` in a forest, starting at `a`.
    fn tree_path(&self, a: usize, b: usize) -> Vec<usize> {
        let dist = self.bfs_dist(b);
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let d = dist[cur].expect("endpoints share a component");
            cur = self
                .neighbors(cur)
                .find(|&u| dist[u] == Some(d - 1))
                .expect("a forest path descends");
            path.push(cur);
        }
        path
    }

    /// A longest path of a forest, oriented from its smaller endpoint.
    ///
    /// Among all longest paths the one with the lexicographically least
    /// endpoint pair is returned; an edgeless graph yields `[0]`.
    pub fn longest_path_in_forest(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_forest() {
            return Err(GraphError::NotAForest);
        }
        if self.n == 0 {
            return Ok(Vec::new());
        }
        let mut best = (0usize, 0usize, 0usize);
        for a in 0..self.n {
            for (b, d) in self.bfs_dist(a).into_iter().enumerate().skip(a) {
                if let Some(d) = d {
                    if d > best.0 {
                        best = (d, a, b);
                    }
                }
            }
        }
        Ok(self.tree_path(best.1, best.2))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::graph6::emit_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(0, n - 1).unwrap();
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn residual_of_middle_edge() {
        let g = path(4).residual(Edge::new(1, 2)).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn residual_examples() {
        for e in complete(4).edges() {
            assert_eq!(complete(4).residual(e).unwrap(), complete(2));
        }
        for e in cycle(6).edges() {
            let r = cycle(6).residual(e).unwrap();
            assert_eq!(r.edge_count(), 3);
            assert!(r.is_linear_forest() && r.is_connected());
        }
        assert_eq!(
            path(4).residual(Edge::new(0, 2)),
            Err(GraphError::EdgeAbsent(Edge::new(0, 2)))
        );
    }

    #[test]
    fn deletions() {
        assert_eq!(path(3).delete_vertex(2).unwrap(), path(2));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.delete_vertex(0).unwrap(), Graph::empty(3));
        let c = cycle(6);
        assert_eq!(
            c.induced_delete(&[2, 3]).unwrap(),
            c.residual(Edge::new(2, 3)).unwrap()
        );
        assert!(matches!(
            c.induced_delete(&[6]),
            Err(GraphError::VertexOutOfRange { vertex: 6, n: 6 })
        ));
    }

    #[test]
    fn relabeling_is_order_preserving() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 3), (2, 4)]).unwrap();
        let (h, map) = g.induced_with_map(0b11010);
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(h.edges(), vec![Edge::new(0, 1)]);
    }

    #[test]
    fn component_listing() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(cycle(6).components().len(), 1);
        let k1_k2 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(k1_k2.components(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn star_detection() {
        let k2 = path(2);
        assert!(k2.is_star(&[0, 1]));
        assert!(!path(4).is_star(&[0, 1, 2, 3]));
        let k15 = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert!(k15.is_star(&[0, 1, 2, 3, 4, 5]));
        assert!(Graph::empty(1).is_star(&[0]));
        assert!(!complete(3).is_star(&[0, 1, 2]));
    }

    #[test]
    fn longest_paths() {
        assert_eq!(
            path(7).longest_path_in_forest().unwrap(),
            (0..7).collect::<Vec<_>>()
        );
        assert_eq!(Graph::empty(3).longest_path_in_forest().unwrap(), vec![0]);
        assert_eq!(
            cycle(5).longest_path_in_forest(),
            Err(GraphError::NotAForest)
        );
        // spider with legs 2,2,1 around 0: tie between endpoint pairs, least wins
        let spider = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(spider.longest_path_in_forest().unwrap(), vec![2, 1, 0, 3, 4]);
    }

    #[test]
    fn vertex_cap() {
        assert!(Graph::new(62).is_ok());
        assert_eq!(Graph::new(63), Err(GraphError::TooManyVertices(63)));
        let mut g = Graph::empty(62);
        assert!(g.add_vertex().is_err());
        assert_eq!(g.add_edge(3, 3), Err(GraphError::SelfLoop(3)));
    }

    #[test]
    fn first_edge_is_least() {
        let g = Graph::from_edges(5, &[(3, 4), (1, 4), (1, 2)]).unwrap();
        assert_eq!(g.first_edge(), Some(Edge::new(1, 2)));
        assert_eq!(g.edges()[0], Edge::new(1, 2));
        assert_eq!(Graph::empty(3).first_edge(), None);
    }
}
