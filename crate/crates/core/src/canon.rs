//! Canonical certificates: byte strings that are equal exactly when two
//! graphs are isomorphic once isolated vertices are discarded.
//!
//! Each connected component is encoded on its own and the encodings are
//! sorted, so disjoint unions never cost a search over component
//! permutations. Trees get a centre-rooted parenthesis encoding. Every other
//! component is canonized by individualization-refinement: equitable
//! partition refinement, then a backtracking search over the first
//! non-singleton cell, keeping the lexicographically greatest relabeled
//! adjacency matrix. Automorphisms found at equal leaves, and transpositions
//! of twin vertices, prune sibling branches.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, Graph};

const TREE_UNICENTRAL: u8 = 0;
const TREE_BICENTRAL: u8 = 1;
const GENERAL: u8 = 2;

/// Opaque complete isomorphism invariant of a graph modulo isolated vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Wraps raw bytes, e.g. read back from a cache. Only the framing is
    /// checked here; [`Certificate::to_graph`] validates fully.
    pub fn from_bytes(bytes: Vec<u8>) -> Option<Self> {
        framing_ok(&bytes).then_some(Certificate(bytes))
    }
}

impl Certificate {
    /// Rebuilds a graph with this certificate, components in certificate
    /// order. Returns `None` for bytes that no graph produces.
    pub fn to_graph(&self) -> Option<Graph> {
        let mut adj: Vec<u64> = Vec::new();
        let mut rest = self.0.split_first()?.1;
        while !rest.is_empty() {
            let len = u16::from_be_bytes([*rest.first()?, *rest.get(1)?]) as usize;
            let part = rest.get(2..2 + len)?;
            rest = &rest[2 + len..];
            let rows = decode_component(part)?;
            let base = adj.len();
            if base + rows.len() > crate::graph::MAX_VERTICES {
                return None;
            }
            adj.extend(rows.into_iter().map(|r| r << base));
        }
        let g = Graph::from_adjacency(adj);
        (canonical_certificate(&g) == *self).then_some(g)
    }
}

fn decode_component(part: &[u8]) -> Option<Vec<u64>> {
    let (&kind, rest) = part.split_first()?;
    let (&n, data) = rest.split_first()?;
    let n = n as usize;
    if !(2..=crate::graph::MAX_VERTICES).contains(&n) {
        return None;
    }
    let mut rows = vec![0u64; n];
    match kind {
        TREE_UNICENTRAL | TREE_BICENTRAL => {
            // parenthesis codes: each '(' opens a child of the open vertex
            let mut stack: Vec<usize> = Vec::new();
            let mut next = 0;
            let mut roots = Vec::new();
            for &c in data {
                match c {
                    b'(' => {
                        if next == n {
                            return None;
                        }
                        match stack.last() {
                            Some(&p) => {
                                rows[p] |= bit(next);
                                rows[next] |= bit(p);
                            }
                            None => roots.push(next),
                        }
                        stack.push(next);
                        next += 1;
                    }
                    b')' => {
                        stack.pop()?;
                    }
                    _ => return None,
                }
            }
            let want_roots = if kind == TREE_UNICENTRAL { 1 } else { 2 };
            if !stack.is_empty() || next != n || roots.len() != want_roots {
                return None;
            }
            if let [a, b] = roots[..] {
                rows[a] |= bit(b);
                rows[b] |= bit(a);
            }
        }
        GENERAL => {
            let pairs = n * (n - 1) / 2;
            if data.len() != pairs.div_ceil(8) {
                return None;
            }
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if data[k / 8] >> (7 - k % 8) & 1 == 1 {
                        rows[i] |= bit(j);
                        rows[j] |= bit(i);
                    }
                    k += 1;
                }
            }
        }
        _ => return None,
    }
    Some(rows)
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

fn framing_ok(bytes: &[u8]) -> bool {
    let Some((&count, mut rest)) = bytes.split_first() else {
        return false;
    };
    for _ in 0..count {
        if rest.len() < 2 {
            return false;
        }
        let len = u16::from_be_bytes([rest[0], rest[1]]) as usize;
        if len < 2 || rest.len() < 2 + len || rest[2] > GENERAL {
            return false;
        }
        rest = &rest[2 + len..];
    }
    rest.is_empty()
}

pub fn canonical_certificate(g: &Graph) -> Certificate {
    let mut parts: Vec<Vec<u8>> = g
        .component_masks()
        .into_iter()
        .filter(|m| m.count_ones() > 1)
        .map(|m| encode_component(&g.induced(m)))
        .collect();
    parts.sort();
    let mut out = vec![parts.len() as u8];
    for p in parts {
        out.extend_from_slice(&(p.len() as u16).to_be_bytes());
        out.extend(p);
    }
    Certificate(out)
}

fn encode_component(h: &Graph) -> Vec<u8> {
    if h.edge_count() + 1 == h.vertex_count() {
        encode_tree(h)
    } else {
        let mut out = vec![GENERAL, h.vertex_count() as u8];
        let labels = canonical_labeling(h);
        out.extend(pack_rows(&relabeled_rows(h, &labels)));
        out
    }
}

// ---------------------------------------------------------------- trees

fn tree_centers(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut alive = h.vertex_mask();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            alive &= !bit(l);
        }
        for &l in &leaves {
            for u in bits(h.neighbor_mask(l) & alive) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        leaves = next;
    }
    bits(alive).collect()
}

fn rooted_code(h: &Graph, v: usize, parent: Option<usize>, out: &mut Vec<u8>) {
    let mut kids: Vec<Vec<u8>> = h
        .neighbors(v)
        .filter(|&u| Some(u) != parent)
        .map(|u| {
            let mut c = Vec::new();
            rooted_code(h, u, Some(v), &mut c);
            c
        })
        .collect();
    kids.sort();
    out.push(b'(');
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
}

fn encode_tree(h: &Graph) -> Vec<u8> {
    let centers = tree_centers(h);
    let mut out = Vec::with_capacity(2 * h.vertex_count() + 2);
    match centers[..] {
        [c] => {
            out.push(TREE_UNICENTRAL);
            out.push(h.vertex_count() as u8);
            rooted_code(h, c, None, &mut out);
        }
        [a, b] => {
            out.push(TREE_BICENTRAL);
            out.push(h.vertex_count() as u8);
            let mut ca = Vec::new();
            let mut cb = Vec::new();
            rooted_code(h, a, Some(b), &mut ca);
            rooted_code(h, b, Some(a), &mut cb);
            if cb < ca {
                std::mem::swap(&mut ca, &mut cb);
            }
            out.extend(ca);
            out.extend(cb);
        }
        _ => unreachable!("a tree has one or two centres"),
    }
    out
}

// ------------------------------------------------ individualization-refinement

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | bit(v))
}

/// Refines the ordered partition to the coarsest equitable refinement.
/// Splitting depends only on cell order and neighbour counts, so the result
/// commutes with relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cell_mask(&cells[s]);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbor_mask(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut tagged: Vec<(u32, usize)> =
                    cells[c].iter().map(|&v| (count(v), v)).collect();
                tagged.sort_unstable();
                let mut parts: Cells = Vec::new();
                let mut last = None;
                for (k, v) in tagged {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'restart;
            }
        }
        return;
    }
}

/// Rows of the graph under `labels` (`labels[v]` = new id of `v`).
fn relabeled_rows(g: &Graph, labels: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.vertex_count()];
    for v in 0..g.vertex_count() {
        rows[labels[v]] = bits(g.neighbor_mask(v)).fold(0, |m, u| m | bit(labels[u]));
    }
    rows
}

fn pack_rows(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut out = Vec::with_capacity(n * n / 16 + 1);
    let (mut acc, mut filled) = (0u8, 0);
    for (i, row) in rows.iter().enumerate() {
        for j in i + 1..n {
            acc = acc << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

struct Search<'g> {
    g: &'g Graph,
    best_rows: Option<Vec<u64>>,
    best_labels: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

const MAX_GENERATORS: usize = 128;

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let mut labels = vec![0; self.g.vertex_count()];
        for (i, c) in cells.iter().enumerate() {
            labels[c[0]] = i;
        }
        let rows = relabeled_rows(self.g, &labels);
        let order = match &self.best_rows {
            None => Ordering::Greater,
            Some(best) => rows.cmp(best),
        };
        match order {
            Ordering::Greater => {
                self.best_rows = Some(rows);
                self.best_labels = labels;
            }
            Ordering::Equal if self.generators.len() < MAX_GENERATORS => {
                // both labelings give the same graph: best^-1 . labels is an automorphism
                let mut inv = vec![0; labels.len()];
                for (v, &l) in self.best_labels.iter().enumerate() {
                    inv[l] = v;
                }
                let gamma: Vec<usize> = labels.iter().map(|&l| inv[l]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.generators.push(gamma);
                }
            }
            _ => {}
        }
    }

    fn equivalent_to_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let g = self.g;
        // twins: swapping them is an automorphism fixing everything else
        if explored.iter().any(|&u| {
            g.neighbor_mask(u) & !bit(v) == g.neighbor_mask(v) & !bit(u)
        }) {
            return true;
        }
        let n = g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if prefix.iter().all(|&x| gamma[x] == x) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root_v = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root_v)
    }

    fn descend(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut target = cells[t].clone();
        target.sort_unstable();
        let mut explored = Vec::new();
        for &v in &target {
            if self.equivalent_to_explored(prefix, v, &explored) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[t].iter().copied().filter(|&x| x != v).collect();
            child.splice(t..=t, [vec![v], rest]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical labeling: `labels[v]` is the canonical id of vertex `v`.
pub(crate) fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best_rows: None,
        best_labels: Vec::new(),
        generators: Vec::new(),
    };
    search.descend(vec![(0..n).collect()], &mut Vec::new());
    search.best_labels
}

/// Canonical form of the whole labeled graph (isolated vertices kept).
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{basic, construction, Family};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cert(g: &Graph) -> Certificate {
        canonical_certificate(g)
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    /// Brute-force isomorphism test over all bijections, with degree pruning.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        let a = a.without_isolated();
        let b = b.without_isolated();
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let v = map.len();
            if v == a.vertex_count() {
                return true;
            }
            for w in 0..b.vertex_count() {
                if used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                    continue;
                }
                if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                    map.push(w);
                    if extend(a, b, map, used | 1 << w) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        extend(&a, &b, &mut Vec::new(), 0)
    }

    #[test]
    fn path_relabelings_agree() {
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let q = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(cert(&p), cert(&q));
        assert_ne!(cert(&basic(Family::Complete, &[3]).unwrap()), cert(&p));
    }

    #[test]
    fn isolated_vertices_ignored() {
        let c6 = basic(Family::Cycle, &[6]).unwrap();
        let mut c6k1 = c6.clone();
        c6k1.add_vertex().unwrap();
        assert_eq!(cert(&c6), cert(&c6k1));
        assert_eq!(cert(&Graph::empty(0)), cert(&Graph::empty(5)));
    }

    #[test]
    fn cycle_three_is_complete_three() {
        assert_eq!(
            cert(&basic(Family::Cycle, &[3]).unwrap()),
            cert(&basic(Family::Complete, &[3]).unwrap())
        );
    }

    #[test]
    fn random_permutations_keep_certificate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let perm = random_perm(&mut rng, n);
            assert_eq!(cert(&g), cert(&g.relabel(&perm)), "{g:?} under {perm:?}");
            assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
    }

    #[test]
    fn certificates_separate_non_isomorphic_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut distinct = 0;
        while distinct < 1000 {
            let n = rng.gen_range(2..=8);
            // shared edge count makes the pairs harder to tell apart
            let a = random_graph(&mut rng, n, 0.5);
            let mut b = Graph::empty(n);
            let mut all: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            all.shuffle(&mut rng);
            for &(u, v) in all.iter().take(a.edge_count()) {
                b.add_edge(u, v).unwrap();
            }
            let iso = brute_isomorphic(&a, &b);
            assert_eq!(cert(&a) == cert(&b), iso, "{a:?} vs {b:?}");
            if !iso {
                distinct += 1;
            }
        }
    }

    #[test]
    fn symmetric_families_are_handled() {
        // large automorphism groups exercise the pruning
        for (f, p) in [
            (Family::Complete, vec![12]),
            (Family::CompleteBipartite, vec![6, 7]),
            (Family::Star, vec![20]),
        ] {
            let g = basic(f, &p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let perm = random_perm(&mut rng, g.vertex_count());
            assert_eq!(cert(&g), cert(&g.relabel(&perm)));
        }
        for g in [
            construction("gadget_H", &[]).unwrap(),
            construction("G_k", &[1]).unwrap(),
            construction("cubic_tree", &[4]).unwrap(),
            construction("K_minusPM", &[3]).unwrap(),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(6);
            let perm = random_perm(&mut rng, g.vertex_count());
            assert_eq!(cert(&g), cert(&g.relabel(&perm)));
        }
    }

    #[test]
    fn framing_round_trips() {
        let c = cert(&construction("gadget_H", &[]).unwrap());
        assert_eq!(Certificate::from_bytes(c.as_bytes().to_vec()), Some(c));
        assert_eq!(Certificate::from_bytes(vec![]), None);
        assert_eq!(Certificate::from_bytes(vec![1, 0]), None);
    }

    #[test]
    fn certificates_decode_to_their_graphs() {
        let mut graphs: Vec<Graph> = crate::corpus::exhaustive(6);
        graphs.push(construction("gadget_H", &[]).unwrap());
        graphs.push(construction("comb", &[2]).unwrap());
        graphs.push(crate::construct::parse_graph_spec("path:5+cycle:4+star:3+complete:2").unwrap());
        for g in graphs {
            let c = cert(&g);
            let back = c.to_graph().expect("decodes");
            assert_eq!(cert(&back), c);
            assert_eq!(back.vertex_count(), g.vertex_count() - g.isolated_mask().count_ones() as usize);
        }
        // a well-framed but non-canonical general component is rejected
        let p3_rows = vec![1u8, 0, 3, 2, 3, 0b1000_0000];
        assert!(Certificate::from_bytes(p3_rows.clone()).is_some());
        assert_eq!(Certificate(p3_rows).to_graph(), None);
        assert_eq!(Certificate(vec![1, 0, 4, 0, 3, b'(', b')']).to_graph(), None);
    }
}
