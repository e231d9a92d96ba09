//! Graph corpora: exhaustive isomorphism classes, tree and cubic classes,
//! named families, graph6 files and seeded random samples.
//!
//! A corpus is described by a spec string:
//!
//! ```text
//! exhaustive:5            every class on 5 vertices
//! exhaustive:1..7         every class on 1 to 7 vertices (ranges are inclusive)
//! file:graphs.g6          one graph6 string per line
//! family:path:1..28       path:1 .. path:28
//! family:split_extremal:6..9:1
//!                         split_extremal:n,1 for n in 6..=9
//! family:trees:1..10      every tree class on 1 to 10 vertices
//! family:cubic:4..12      every connected cubic class up to 12 vertices
//! random:forest:500:14    500 forests on at most 14 vertices (seeded)
//! random:gnp:100:8        100 graphs on 8 vertices, each edge with probability 1/2
//! graph:paw*path:3        a single graph given by a graph spec
//! ```
//!
//! Several specs can be joined with `;`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::{canonical_certificate, Certificate};
use crate::construct::{complete, disjoint_union, named};
use crate::graph::{full_mask, Edge, Graph, GraphError};
use crate::graph6::{parse_graph6_lines, Graph6Error};

/// Largest order with a built-in exhaustive enumeration.
pub const MAX_EXHAUSTIVE: usize = 7;
/// Largest order for the built-in tree and cubic enumerations.
pub const MAX_TREE_ORDER: usize = 16;
pub const MAX_CUBIC_ORDER: usize = 14;
pub const MAX_RANDOM_COUNT: usize = 1 << 20;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("bad corpus spec {spec:?}: {reason}")]
    Spec { spec: String, reason: String },
    #[error("exhaustive enumeration is built in only up to n = {MAX_EXHAUSTIVE}, asked for {0}")]
    TooLarge(usize),
    #[error("cannot read {path}: {reason}")]
    Io { path: PathBuf, reason: String },
    #[error("{path}, line {line}: {source}")]
    Graph6 {
        path: PathBuf,
        line: usize,
        source: Graph6Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RandomModel {
    /// Uniform labeled tree from a random Prüfer sequence, then a random
    /// number of random edge deletions.
    Forest { max_n: usize },
    /// Each pair is an edge with probability 1/2.
    Gnp { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Exhaustive(RangeInclusive<usize>),
    File(PathBuf),
    Family {
        name: String,
        range: RangeInclusive<usize>,
        extra: Vec<usize>,
    },
    Random {
        model: RandomModel,
        count: usize,
        seed: u64,
    },
    /// One graph from a graph spec such as `paw*path:3`.
    Graph(String),
}

/// A graph together with a label saying where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub source: Source,
}

fn spec_err(spec: &str, reason: impl Into<String>) -> CorpusError {
    CorpusError::Spec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_range(spec: &str, s: &str) -> Result<RangeInclusive<usize>, CorpusError> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| spec_err(spec, format!("bad number {t:?}")))
    };
    let r = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            num(a)?..=num(b)?
        }
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if r.is_empty() {
        return Err(spec_err(spec, "empty range"));
    }
    Ok(r)
}

impl Corpus {
    /// Parses a corpus spec. `seed` is used by random sources only.
    pub fn parse(spec: &str, seed: u64) -> Result<Corpus, CorpusError> {
        let spec = spec.trim();
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| spec_err(spec, "expected kind:arguments"))?;
        let source = match kind {
            "exhaustive" => {
                let r = parse_range(spec, rest)?;
                if *r.end() > MAX_EXHAUSTIVE {
                    return Err(CorpusError::TooLarge(*r.end()));
                }
                Source::Exhaustive(r)
            }
            "file" => {
                if rest.is_empty() {
                    return Err(spec_err(spec, "missing path"));
                }
                Source::File(PathBuf::from(rest))
            }
            "family" => {
                let mut parts = rest.splitn(3, ':');
                let name = parts.next().unwrap_or_default().trim().to_string();
                let range = parse_range(
                    spec,
                    parts.next().ok_or_else(|| spec_err(spec, "missing range"))?,
                )?;
                let extra = match parts.next() {
                    None => Vec::new(),
                    Some(e) => e
                        .split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<usize>()
                                .map_err(|_| spec_err(spec, format!("bad parameter {p:?}")))
                        })
                        .collect::<Result<_, _>>()?,
                };
                match name.as_str() {
                    "trees" if *range.end() > MAX_TREE_ORDER => {
                        return Err(spec_err(spec, format!("trees only up to {MAX_TREE_ORDER}")))
                    }
                    "cubic" if *range.end() > MAX_CUBIC_ORDER => {
                        return Err(spec_err(spec, format!("cubic only up to {MAX_CUBIC_ORDER}")))
                    }
                    "trees" | "cubic" if !extra.is_empty() => {
                        return Err(spec_err(spec, "no extra parameters allowed"))
                    }
                    "trees" | "cubic" => {}
                    other if !crate::construct::all_names().contains(&other) => {
                        return Err(spec_err(spec, format!("unknown family {other:?}")))
                    }
                    _ if *range.end() > 4 * crate::graph::MAX_VERTICES => {
                        return Err(spec_err(spec, "parameter too large"))
                    }
                    _ => {}
                }
                Source::Family { name, range, extra }
            }
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let [model, count, size] = parts[..] else {
                    return Err(spec_err(spec, "expected random:MODEL:COUNT:SIZE"));
                };
                let num = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| spec_err(spec, format!("bad number {t:?}")))
                };
                let (count, size) = (num(count)?, num(size)?);
                if size == 0 || size > crate::graph::MAX_VERTICES {
                    return Err(spec_err(spec, "size must be in 1..=62"));
                }
                if count > MAX_RANDOM_COUNT {
                    return Err(spec_err(spec, format!("count above {MAX_RANDOM_COUNT}")));
                }
                let model = match model {
                    "forest" => RandomModel::Forest { max_n: size },
                    "gnp" => RandomModel::Gnp { n: size },
                    m => return Err(spec_err(spec, format!("unknown model {m:?}"))),
                };
                Source::Random { model, count, seed }
            }
            "graph" => {
                crate::construct::parse_graph_spec(rest)?;
                Source::Graph(rest.trim().to_string())
            }
            k => return Err(spec_err(spec, format!("unknown corpus kind {k:?}"))),
        };
        Ok(Corpus { source })
    }

    pub fn instances(&self) -> Result<Vec<Instance>, CorpusError> {
        let labeled = |prefix: &str, gs: Vec<Graph>| {
            gs.into_iter()
                .enumerate()
                .map(|(i, graph)| Instance {
                    label: format!("{prefix}#{i}"),
                    graph,
                })
                .collect::<Vec<_>>()
        };
        Ok(match &self.source {
            Source::Exhaustive(r) => r
                .clone()
                .flat_map(|n| labeled(&format!("exhaustive:{n}"), exhaustive(n)))
                .collect(),
            Source::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
                    path: path.clone(),
                    reason: e.to_string(),
                })?;
                let graphs = parse_graph6_lines(&text).map_err(|(line, source)| {
                    CorpusError::Graph6 {
                        path: path.clone(),
                        line,
                        source,
                    }
                })?;
                labeled(&format!("file:{}", path.display()), graphs)
            }
            Source::Family { name, range, extra } => match name.as_str() {
                "trees" => range
                    .clone()
                    .flat_map(|n| labeled(&format!("trees:{n}"), trees(n)))
                    .collect(),
                "cubic" => range
                    .clone()
                    .flat_map(|n| labeled(&format!("cubic:{n}"), connected_cubic(n)))
                    .collect(),
                _ => {
                    let mut out = Vec::new();
                    for p in range.clone() {
                        let mut params = vec![p];
                        params.extend(extra);
                        let graph = named(name, &params)?;
                        let args: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                        out.push(Instance {
                            label: format!("{name}:{}", args.join(",")),
                            graph,
                        });
                    }
                    out
                }
            },
            Source::Random { model, count, seed } => {
                let (name, graphs) = match model {
                    RandomModel::Forest { max_n } => ("forest", random_forests(*count, *max_n, *seed)),
                    RandomModel::Gnp { n } => ("gnp", random_gnp(*count, *n, *seed)),
                };
                labeled(&format!("random:{name}:seed={seed}"), graphs)
            }
            Source::Graph(spec) => vec![Instance {
                label: spec.clone(),
                graph: crate::construct::parse_graph_spec(spec)?,
            }],
        })
    }

    /// True when the corpus yields one graph per isomorphism class.
    pub fn is_classes(&self) -> bool {
        match &self.source {
            Source::Exhaustive(_) => true,
            Source::Family { name, .. } => name == "trees" || name == "cubic",
            _ => false,
        }
    }
}

/// Parses `;`-separated corpus specs.
pub fn parse_corpora(spec: &str, seed: u64) -> Result<Vec<Corpus>, CorpusError> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Corpus::parse(s, seed))
        .collect()
}

/// All instances of `;`-separated corpus specs, in order.
pub fn load(spec: &str, seed: u64) -> Result<Vec<Instance>, CorpusError> {
    let mut out = Vec::new();
    for c in parse_corpora(spec, seed)? {
        out.extend(c.instances()?);
    }
    Ok(out)
}

/// Keeps the first graph seen from each isomorphism class, ordered by
/// certificate.
fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen: BTreeMap<Certificate, Graph> = BTreeMap::new();
    for g in graphs {
        seen.entry(canonical_certificate(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

/// Every labeled graph on `n` vertices, in order of the edge bitmask.
/// Only sensible for small `n`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "2^C({n},2) labeled graphs is too many");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let mut adj = vec![0u64; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        Graph::from_adjacency(adj)
    })
}

/// One representative per isomorphism class, by deduplicating every
/// labeled graph. Independent of [`exhaustive`], which it cross-checks.
pub fn exhaustive_by_labeling(n: usize) -> Vec<Graph> {
    dedup(labeled_graphs(n))
}

/// Graphs on `n + 1` vertices obtained by adding a vertex with every
/// possible neighbourhood to each of `base`.
fn extend_by_vertex(base: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for g in base {
        let n = g.vertex_count();
        for nbrs in 0..=full_mask(n) {
            let mut adj = g.adjacency().to_vec();
            for (v, row) in adj.iter_mut().enumerate() {
                if nbrs >> v & 1 == 1 {
                    *row |= 1 << n;
                }
            }
            adj.push(nbrs);
            out.push(Graph::from_adjacency(adj));
        }
    }
    dedup(out)
}

/// One representative per isomorphism class of graphs on `n ≤ 7`
/// vertices. Orders up to 6 come from labeled enumeration; order 7 extends
/// every 6-vertex class by one vertex, which reaches every class because
/// deleting a vertex of a 7-vertex graph leaves some 6-vertex class.
pub fn exhaustive(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_EXHAUSTIVE, "exhaustive enumeration stops at {MAX_EXHAUSTIVE}");
    static CACHE: [OnceLock<Vec<Graph>>; MAX_EXHAUSTIVE + 1] = [const { OnceLock::new() }; MAX_EXHAUSTIVE + 1];
    CACHE[n]
        .get_or_init(|| {
            if n < MAX_EXHAUSTIVE {
                exhaustive_by_labeling(n)
            } else {
                extend_by_vertex(&exhaustive(n - 1))
            }
        })
        .clone()
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown by attaching a leaf to every vertex of every smaller tree.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_TREE_ORDER, "tree enumeration stops at {MAX_TREE_ORDER}");
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let levels = CACHE.get_or_init(|| {
        let mut levels = vec![Vec::new(), vec![Graph::empty(1)]];
        for _ in 2..=MAX_TREE_ORDER {
            let prev = levels.last().unwrap();
            let grown = prev.iter().flat_map(|t: &Graph| {
                (0..t.vertex_count()).map(move |v| crate::construct::add_pendant(t, v).unwrap())
            });
            let next = dedup(grown);
            levels.push(next);
        }
        levels
    });
    levels[n].clone()
}

/// Cubic graphs on `n + 2` vertices made by subdividing two distinct edges
/// of `g` and joining the two new vertices.
fn insert_edge(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let n = g.vertex_count();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            let mut h = g.clone();
            let (x, y) = (n, n + 1);
            h.add_vertex().unwrap();
            h.add_vertex().unwrap();
            for (e, s) in [(a, x), (b, y)] {
                h.remove_edge(e.u, e.v).unwrap();
                h.add_edge(e.u, s).unwrap();
                h.add_edge(e.v, s).unwrap();
            }
            h.add_edge(x, y).unwrap();
            out.push(h);
        }
    }
    out
}

/// Cubic graphs on `n + 4` vertices made by replacing an edge `uw` of `g`
/// with a path through a diamond (`K4` minus an edge).
fn insert_diamond(g: &Graph) -> Vec<Graph> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for e in g.edges() {
        let mut h = g.clone();
        for _ in 0..4 {
            h.add_vertex().unwrap();
        }
        let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
        h.remove_edge(e.u, e.v).unwrap();
        for (x, y) in [(e.u, a), (e.v, b), (a, c), (a, d), (b, c), (b, d), (c, d)] {
            h.add_edge(x, y).unwrap();
        }
        out.push(h);
    }
    out
}

/// Every cubic graph, connected or not, on `n` vertices.
fn all_cubic(n: usize) -> Vec<Graph> {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let levels = CACHE.get_or_init(|| {
        let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); MAX_CUBIC_ORDER + 1];
        levels[4] = vec![complete(4).unwrap()];
        for m in (6..=MAX_CUBIC_ORDER).step_by(2) {
            let mut candidates: Vec<Graph> = levels[m - 2].iter().flat_map(insert_edge).collect();
            if m >= 8 {
                candidates.extend(levels[m - 4].iter().flat_map(insert_diamond));
            }
            // disconnected graphs: a connected part plus anything on the rest
            for a in (4..=m - 4).step_by(2) {
                for c in levels[a].iter().filter(|g| g.is_connected()) {
                    for rest in &levels[m - a] {
                        candidates.push(disjoint_union(c, rest).unwrap());
                    }
                }
            }
            levels[m] = dedup(candidates);
        }
        levels
    });
    levels.get(n).cloned().unwrap_or_default()
}

/// One representative per isomorphism class of connected cubic graphs on
/// `n` vertices; empty for odd `n` or `n < 4`.
///
/// Generated from `K4` by edge insertion and diamond insertion, starting
/// from all cubic graphs on fewer vertices, disconnected ones included,
/// since some graphs with bridges only reduce to a disconnected graph.
pub fn connected_cubic(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CUBIC_ORDER, "cubic enumeration stops at {MAX_CUBIC_ORDER}");
    all_cubic(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into a labeled tree.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut g = Graph::empty(n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, s).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(last[0], last[1]).unwrap();
    g
}

/// `count` forests: order uniform in `1..=max_n`, a uniform labeled tree on
/// that order, then `k` distinct random edges deleted with `k` uniform in
/// `0..=(n-1)/2`.
pub fn random_forests(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let mut g = if n < 2 {
                Graph::empty(n)
            } else {
                let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
                prufer_tree(&seq)
            };
            let k = rng.gen_range(0..=n.saturating_sub(1) / 2);
            let edges: Vec<Edge> = g.edges();
            for e in edges.choose_multiple(&mut rng, k) {
                g.remove_edge(e.u, e.v).unwrap();
            }
            g
        })
        .collect()
}

pub fn random_gnp(count: usize, n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut g = Graph::empty(n);
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
        .collect()
}
