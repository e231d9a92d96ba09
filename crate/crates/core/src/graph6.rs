//! graph6 text encoding for graphs on at most 62 vertices.
//!
//! Only the single-byte size header is accepted. A trailing newline and the
//! optional `>>graph6<<` prefix are tolerated on input.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: &'static str,
}

fn err(offset: usize, reason: &'static str) -> Graph6Error {
    Graph6Error { offset, reason }
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_bytes(text.as_bytes())
}

pub fn parse_graph6_bytes(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut end = input.len();
    while end > 0 && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let start = if input[..end].starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &input[start..end];
    let Some(&head) = body.first() else {
        return Err(err(start, "empty input"));
    };
    if !(BIAS..=126).contains(&head) {
        return Err(err(start, "size byte outside 63..=126"));
    }
    let n = (head - BIAS) as usize;
    if n > MAX_VERTICES {
        return Err(err(start, "more than 62 vertices"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &body[1..];
    if data.len() != expected {
        let at = start + 1 + data.len().min(expected);
        return Err(err(
            at,
            if data.len() < expected {
                "truncated edge data"
            } else {
                "trailing bytes after edge data"
            },
        ));
    }
    let mut adj = vec![0u64; n];
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &byte) in data.iter().enumerate() {
        let offset = start + 1 + k;
        if !(BIAS..=126).contains(&byte) {
            return Err(err(offset, "data byte outside 63..=126"));
        }
        let six = byte - BIAS;
        for shift in (0..6).rev() {
            let set = six >> shift & 1 == 1;
            if j >= n {
                if set {
                    return Err(err(offset, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(1 + (n * n / 12) + 1);
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbor_mask(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

/// Parses one graph per non-blank line; errors carry the line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(no, l)| parse_graph6(l.trim()).map_err(|e| (no + 1, e)))
        .collect()
}
