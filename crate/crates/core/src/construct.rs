//! Standard graph families, graph operations, and the named constructions
//! used as extremal examples.
//!
//! Graphs can also be described by short spec strings, e.g. `cycle:6`,
//! `complete_bipartite:2,3`, `gadget_H`, `paw*path:3` (cartesian product)
//! or `complete:2+cycle:6` (disjoint union). `*` binds tighter than `+`.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Names accepted by [`construction`].
pub const CONSTRUCTION_NAMES: &[&str] = &[
    "comb",
    "split_extremal",
    "paw",
    "gadget_K",
    "gadget_B",
    "gadget_H",
    "cubic_tree",
    "G_k",
    "K_minusPM",
    "twin_cliques",
    "clique_pendant",
    "rK2_C6",
];

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

fn arity(name: &str, params: &[usize], want: usize) -> Result<(), GraphError> {
    if params.len() != want {
        return Err(bad(format!(
            "{name} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn positive(name: &str, params: &[usize]) -> Result<(), GraphError> {
    if params.contains(&0) {
        return Err(bad(format!("{name} sizes must be positive")));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    positive("path", &[n])?;
    let mut g = Graph::new(n)?;
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle needs at least 3 vertices"));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    positive("complete", &[n])?;
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    positive("complete_bipartite", &[a, b])?;
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{1,t}` with centre 0.
pub fn star(t: usize) -> Result<Graph, GraphError> {
    positive("star", &[t])?;
    complete_bipartite(1, t)
}

pub fn basic(family: Family, params: &[usize]) -> Result<Graph, GraphError> {
    match family {
        Family::Path => arity("path", params, 1).and_then(|_| path(params[0])),
        Family::Cycle => arity("cycle", params, 1).and_then(|_| cycle(params[0])),
        Family::Complete => arity("complete", params, 1).and_then(|_| complete(params[0])),
        Family::CompleteBipartite => arity("complete_bipartite", params, 2)
            .and_then(|_| complete_bipartite(params[0], params[1])),
        Family::Star => arity("star", params, 1).and_then(|_| star(params[0])),
    }
}

/// `G + H`; the vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let off = g.vertex_count();
    let mut out = Graph::new(off + h.vertex_count())?;
    for e in g.edges() {
        out.add_edge(e.u, e.v)?;
    }
    for e in h.edges() {
        out.add_edge(off + e.u, off + e.v)?;
    }
    Ok(out)
}

/// `G □ H` on pairs `(x, y)`, with `(x, y)` numbered `x * |H| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = Graph::new(ng * nh)?;
    let id = |x: usize, y: usize| x * nh + y;
    for e in g.edges() {
        for y in 0..nh {
            out.add_edge(id(e.u, y), id(e.v, y))?;
        }
    }
    for e in h.edges() {
        for x in 0..ng {
            out.add_edge(id(x, e.u), id(x, e.v))?;
        }
    }
    Ok(out)
}

/// Adds one new vertex adjacent only to `v`.
pub fn add_pendant(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    let mut out = g.clone();
    let p = out.add_vertex()?;
    out.add_edge(v, p)?;
    Ok(out)
}

/// Path on `0..4k` with pendant `4k + i` attached at spine vertex `i`.
pub fn comb(k: usize) -> Result<Graph, GraphError> {
    positive("comb", &[k])?;
    let spine = 4 * k;
    let mut g = Graph::new(2 * spine)?;
    for i in 0..spine {
        if i > 0 {
            g.add_edge(i - 1, i)?;
        }
        g.add_edge(i, spine + i)?;
    }
    Ok(g)
}

/// `K_n` minus the edges of a clique on its last `n - 3k` vertices, so the
/// clique part is `0..3k` and the rest is independent.
pub fn split_extremal(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || n < 6 * k {
        return Err(bad("split_extremal needs k >= 1 and n >= 6k"));
    }
    let mut g = complete(n)?;
    for u in 3 * k..n {
        for v in u + 1..n {
            g.remove_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Triangle `0,1,2` with pendant 3 at vertex 2.
pub fn paw() -> Graph {
    add_pendant(&complete(3).unwrap(), 2).unwrap()
}

/// `K4` with one edge subdivided. Vertex 0 is the subdivision vertex
/// (degree 2); `1..=4` span `K4` minus the edge `1-2`.
pub fn gadget_k() -> Graph {
    Graph::from_edges(
        5,
        &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    )
    .unwrap()
}

/// [`gadget_k`] plus pendant vertex 5 at the degree-2 vertex.
pub fn gadget_b() -> Graph {
    add_pendant(&gadget_k(), 0).unwrap()
}

/// Attaches a copy of [`gadget_k`] whose degree-2 vertex is `anchor`.
fn attach_k(g: &mut Graph, anchor: usize) -> Result<(), GraphError> {
    let base = g.vertex_count();
    for _ in 0..4 {
        g.add_vertex()?;
    }
    // map gadget_k vertex i (i >= 1) to base + i - 1, vertex 0 to anchor
    let map = |i: usize| if i == 0 { anchor } else { base + i - 1 };
    for e in gadget_k().edges() {
        g.add_edge(map(e.u), map(e.v))?;
    }
    Ok(())
}

/// Vertex 0 joined to the degree-2 vertex of three copies of `K`.
pub fn gadget_h() -> Graph {
    g_k(0).unwrap()
}

/// Complete cubic tree of height `k` in breadth-first order: root 0 has
/// three children, every other internal vertex two.
pub fn cubic_tree(k: usize) -> Result<Graph, GraphError> {
    // clamp so absurd heights fail in Graph::new rather than overflow
    let n = if k == 0 { 1 } else { 3 * (1usize << k.min(20)) - 2 };
    let mut g = Graph::new(n)?;
    let mut next = 1;
    let mut level = vec![0usize];
    for depth in 0..k {
        let kids = if depth == 0 { 3 } else { 2 };
        let mut below = Vec::new();
        for &p in &level {
            for _ in 0..kids {
                g.add_edge(p, next)?;
                below.push(next);
                next += 1;
            }
        }
        level = below;
    }
    Ok(g)
}

/// Leaves of [`cubic_tree`] in increasing order.
pub fn cubic_tree_leaves(k: usize) -> Vec<usize> {
    if k == 0 {
        return vec![0];
    }
    let n = 3 * (1 << k) - 2;
    (n - 3 * (1 << (k - 1))..n).collect()
}

/// `T_{k+1}` with each leaf identified with the degree-2 vertex of a copy
/// of `K`; cubic and connected on `18 * 2^k - 2` vertices.
pub fn g_k(k: usize) -> Result<Graph, GraphError> {
    if 18 * (1usize << k.min(8)) - 2 > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(18 * (1 << k.min(8)) - 2));
    }
    let mut g = cubic_tree(k + 1)?;
    for leaf in cubic_tree_leaves(k + 1) {
        attach_k(&mut g, leaf)?;
    }
    Ok(g)
}

/// `K_{4k+2}` minus the perfect matching `{2i, 2i+1}`.
pub fn k_minus_pm(k: usize) -> Result<Graph, GraphError> {
    positive("K_minusPM", &[k])?;
    let mut g = complete(4 * k + 2)?;
    for i in 0..2 * k + 1 {
        g.remove_edge(2 * i, 2 * i + 1)?;
    }
    Ok(g)
}

/// Two copies of `K_{2k}` on `0..2k` and `2k..4k`, each missing its edge
/// between its first two vertices, joined by `0-2k` and `1-(2k+1)`.
pub fn twin_cliques(k: usize) -> Result<Graph, GraphError> {
    if k < 2 {
        return Err(bad("twin_cliques needs k >= 2"));
    }
    let m = 2 * k;
    let g = disjoint_union(&complete(m)?, &complete(m)?)?;
    let mut g = g;
    g.remove_edge(0, 1)?;
    g.remove_edge(m, m + 1)?;
    g.add_edge(0, m)?;
    g.add_edge(1, m + 1)?;
    Ok(g)
}

/// `K_{2r-1}` plus a pendant at vertex 0.
pub fn clique_pendant(r: usize) -> Result<Graph, GraphError> {
    if r < 2 {
        return Err(bad("clique_pendant needs r >= 2"));
    }
    add_pendant(&complete(2 * r - 1)?, 0)
}

/// `r` isolated edges on `0..2r` followed by a 6-cycle.
pub fn rk2_c6(r: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(2 * r)?;
    for i in 0..r {
        g.add_edge(2 * i, 2 * i + 1)?;
    }
    disjoint_union(&g, &cycle(6)?)
}

pub fn construction(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let one = |params: &[usize]| arity(name, params, 1).map(|_| params[0]);
    match name {
        "comb" => comb(one(params)?),
        "split_extremal" => {
            arity(name, params, 2)?;
            split_extremal(params[0], params[1])
        }
        "paw" => arity(name, params, 0).map(|_| paw()),
        "gadget_K" => arity(name, params, 0).map(|_| gadget_k()),
        "gadget_B" => arity(name, params, 0).map(|_| gadget_b()),
        "gadget_H" => arity(name, params, 0).map(|_| gadget_h()),
        "cubic_tree" => cubic_tree(one(params)?),
        "G_k" => g_k(one(params)?),
        "K_minusPM" => k_minus_pm(one(params)?),
        "twin_cliques" => twin_cliques(one(params)?),
        "clique_pendant" => clique_pendant(one(params)?),
        "rK2_C6" => rk2_c6(one(params)?),
        _ => Err(bad(format!(
            "unknown construction {name:?}; available: {}",
            all_names().join(", ")
        ))),
    }
}

/// Builds any named graph, basic family or special construction.
pub fn named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    match name.parse::<Family>() {
        Ok(f) => basic(f, params),
        Err(_) => construction(name, params),
    }
}

/// All names accepted by [`named`].
pub fn all_names() -> Vec<&'static str> {
    Family::ALL
        .iter()
        .map(|f| f.name())
        .chain(CONSTRUCTION_NAMES.iter().copied())
        .collect()
}

/// Splits `name:1,2` into the name and its numeric parameters.
pub fn split_atom(spec: &str) -> Result<(&str, Vec<usize>), GraphError> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n.trim(), Some(r)),
        None => (spec.trim(), None),
    };
    if name.is_empty() {
        return Err(bad("empty graph name"));
    }
    let params = match rest {
        None => Vec::new(),
        Some(r) => r
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad parameter {p:?} in {spec:?}")))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok((name, params))
}

/// Parses a graph spec string (see the module docs).
pub fn parse_graph_spec(spec: &str) -> Result<Graph, GraphError> {
    let mut acc: Option<Graph> = None;
    for term in spec.split('+') {
        let mut prod: Option<Graph> = None;
        for factor in term.split('*') {
            let (name, params) = split_atom(factor)?;
            // keep absurd parameters away from the constructors
            if params.iter().any(|&p| p > 4 * crate::graph::MAX_VERTICES) {
                return Err(GraphError::TooManyVertices(params.iter().copied().max().unwrap()));
            }
            let g = named(name, &params)?;
            prod = Some(match prod {
                None => g,
                Some(p) => cartesian_product(&p, &g)?,
            });
        }
        let prod = prod.expect("split yields at least one factor");
        acc = Some(match acc {
            None => prod,
            Some(a) => disjoint_union(&a, &prod)?,
        });
    }
    Ok(acc.expect("split yields at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_certificate as cert;
    use crate::graph::Edge;

    #[test]
    fn basic_families() {
        assert_eq!(path(1).unwrap(), Graph::empty(1));
        assert_eq!(cert(&cycle(3).unwrap()), cert(&complete(3).unwrap()));
        let s = star(5).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (6, 5));
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(basic(Family::CompleteBipartite, &[2]).is_err());
        assert!(complete(63).is_err());
    }

    #[test]
    fn products_and_unions() {
        let k2 = complete(2).unwrap();
        assert_eq!(
            cert(&cartesian_product(&k2, &k2).unwrap()),
            cert(&cycle(4).unwrap())
        );
        let p2p3 = cartesian_product(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!((p2p3.vertex_count(), p2p3.edge_count()), (6, 7));
        let u = disjoint_union(&k2, &cycle(6).unwrap()).unwrap();
        assert_eq!(u.components(), vec![vec![0, 1], (2..8).collect::<Vec<_>>()]);
    }

    #[test]
    fn pendant_on_triangle_is_paw() {
        let k3 = complete(3).unwrap();
        for v in 0..3 {
            assert_eq!(cert(&add_pendant(&k3, v).unwrap()), cert(&paw()));
        }
    }

    #[test]
    fn comb_structure() {
        for k in 1..=3 {
            let g = comb(k).unwrap();
            let n = 8 * k;
            assert_eq!(g.vertex_count(), n);
            let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
            assert_eq!(leaves.len(), n / 2);
            // pendant edges form a perfect matching
            let mut covered = 0u64;
            for &l in &leaves {
                let e = Edge::new(l, g.neighbors(l).next().unwrap());
                assert_eq!(covered & e.mask(), 0);
                covered |= e.mask();
            }
            assert_eq!(covered, g.vertex_mask());
            assert!(g.is_forest() && g.is_connected());
        }
    }

    #[test]
    fn split_extremal_edges() {
        assert_eq!(split_extremal(6, 1).unwrap().edge_count(), 12);
        for n in 6..=9 {
            assert_eq!(split_extremal(n, 1).unwrap().edge_count(), 3 + 3 * (n - 3));
        }
        assert_eq!(split_extremal(12, 2).unwrap().edge_count(), 15 + 6 * 6);
        assert!(split_extremal(5, 1).is_err());
    }

    #[test]
    fn gadgets() {
        let k = gadget_k();
        assert_eq!((k.vertex_count(), k.edge_count()), (5, 7));
        assert_eq!(k.degree(0), 2);
        assert_eq!(gadget_b().vertex_count(), 6);
        let h = gadget_h();
        assert_eq!(h.vertex_count(), 16);
        assert_eq!(h.regular_degree(), Some(3));
        assert!(h.is_connected());
        assert!(h.delete_vertex(0).unwrap().components().len() == 3);
    }

    #[test]
    fn cubic_trees() {
        assert_eq!(cubic_tree(1).unwrap().vertex_count(), 4);
        assert_eq!(cubic_tree(2).unwrap().vertex_count(), 10);
        for k in 1..=4 {
            let t = cubic_tree(k).unwrap();
            assert_eq!(t.vertex_count(), 6 * (1 << (k - 1)) - 2);
            assert!(t.is_forest() && t.is_connected());
            let leaves = cubic_tree_leaves(k);
            assert_eq!(leaves.len(), 3 * (1 << (k - 1)));
            for v in 0..t.vertex_count() {
                let want = if leaves.contains(&v) { 1 } else { 3 };
                assert_eq!(t.degree(v), want, "k={k} v={v}");
            }
        }
    }

    #[test]
    fn g_k_shapes() {
        assert_eq!(cert(&g_k(0).unwrap()), cert(&gadget_h()));
        let g1 = g_k(1).unwrap();
        assert_eq!(g1.vertex_count(), 34);
        assert_eq!(g1.regular_degree(), Some(3));
        assert!(g1.is_connected());
        assert!(g_k(2).is_err());
    }

    #[test]
    fn realizer_shapes() {
        let g = twin_cliques(2).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_connected());
        assert_eq!(k_minus_pm(1).unwrap().regular_degree(), Some(4));
        assert_eq!(cert(&clique_pendant(2).unwrap()), cert(&paw()));
        let r = rk2_c6(2).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (10, 8));
    }

    #[test]
    fn twin_clique_cross_choices_are_isomorphic() {
        for k in 2..=4 {
            let a = twin_cliques(k).unwrap();
            let mut b = a.clone();
            let m = 2 * k;
            b.remove_edge(0, m).unwrap();
            b.remove_edge(1, m + 1).unwrap();
            b.add_edge(0, m + 1).unwrap();
            b.add_edge(1, m).unwrap();
            assert_eq!(cert(&a), cert(&b));
        }
    }

    #[test]
    fn spec_strings() {
        assert_eq!(parse_graph_spec("cycle:6").unwrap(), cycle(6).unwrap());
        assert_eq!(
            parse_graph_spec("complete_bipartite:2, 3").unwrap(),
            complete_bipartite(2, 3).unwrap()
        );
        assert_eq!(parse_graph_spec("gadget_H").unwrap(), gadget_h());
        let pp = parse_graph_spec("paw*path:3").unwrap();
        assert_eq!(pp.vertex_count(), 12);
        assert_eq!(
            parse_graph_spec("complete:2+cycle:6").unwrap(),
            rk2_c6(1).unwrap()
        );
        assert!(parse_graph_spec("nope:3").is_err());
        assert!(parse_graph_spec("path:x").is_err());
        assert!(parse_graph_spec("").is_err());
        assert!(parse_graph_spec("path:99999999999").is_err());
    }

    #[test]
    fn extreme_parameters_error_instead_of_panicking() {
        let values = [0, 1, 2, 31, 32, 63, 64, 65, 127, 200, 248];
        for name in all_names() {
            let _ = named(name, &[]);
            for &a in &values {
                let _ = named(name, &[a]);
                for &b in &values {
                    let _ = named(name, &[a, b]);
                }
            }
        }
        assert!(parse_graph_spec("paw*cubic_tree:68").is_err());
    }
}
