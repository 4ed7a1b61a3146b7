//! Text formats: the adjacency-list format and graph6.
//!
//! Adjacency-list text has one line per vertex, `index: neighbor,neighbor,...`.
//! Everything after `#` on a line is ignored, as are blank lines. Every vertex
//! `0..n` must have exactly one line and the listed relation must be symmetric.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("vertex {0} has more than one line")]
    DuplicateVertex(usize),
    #[error("vertex {0} has no line")]
    MissingVertex(usize),
    #[error("vertex {0} lists neighbor {1} twice")]
    RepeatedNeighbor(usize, usize),
    #[error("vertex {0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("no graph found in input")]
    NoGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    AdjacencyList,
    Graph6,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Guesses the format from the first meaningful line: adjacency lists always
/// contain a colon, graph6 never does.
pub fn detect_format(text: &str) -> InputFormat {
    match text.lines().map(strip_comment).find(|l| !l.is_empty()) {
        Some(l) if l.starts_with(">>graph6<<") || !l.contains(':') => InputFormat::Graph6,
        _ => InputFormat::AdjacencyList,
    }
}

/// Parses a single graph in either format.
pub fn load_graph(text: &str) -> Result<Graph, FormatError> {
    match detect_format(text) {
        InputFormat::AdjacencyList => parse_adjacency_list(text),
        InputFormat::Graph6 => {
            let mut graphs = parse_graph6_lines(text)?;
            match graphs.len() {
                0 => Err(FormatError::NoGraph),
                1 => Ok(graphs.remove(0)),
                n => Err(FormatError::Graph6(format!("expected one graph, found {n}"))),
            }
        }
    }
}

pub fn parse_adjacency_list(text: &str) -> Result<Graph, FormatError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let syntax = |reason: String| FormatError::Syntax { line: lineno + 1, reason };
        let (head, tail) = line.split_once(':').ok_or_else(|| syntax(String::from("missing ':'")))?;
        let v: usize = head.trim().parse().map_err(|_| syntax(format!("bad vertex index {:?}", head.trim())))?;
        let mut nbrs = Vec::new();
        for tok in tail.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            nbrs.push(tok.parse::<usize>().map_err(|_| syntax(format!("bad neighbor {tok:?}")))?);
        }
        rows.push((v, nbrs));
    }
    if rows.is_empty() {
        return Err(FormatError::NoGraph);
    }
    let n = rows.iter().map(|r| r.0).max().map_or(0, |m| m + 1);
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
    for (v, mut nbrs) in rows {
        if lists[v].is_some() {
            return Err(FormatError::DuplicateVertex(v));
        }
        nbrs.sort_unstable();
        if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
            return Err(FormatError::RepeatedNeighbor(v, w[0]));
        }
        lists[v] = Some(nbrs);
    }
    let lists: Vec<Vec<usize>> =
        lists.into_iter().enumerate().map(|(v, l)| l.ok_or(FormatError::MissingVertex(v))).collect::<Result<_, _>>()?;
    let mut edges = Vec::new();
    for (u, list) in lists.iter().enumerate() {
        for &w in list {
            if w >= n {
                return Err(GraphError::OutOfRange(u, w, n).into());
            }
            if w == u {
                return Err(GraphError::Loop(u).into());
            }
            if lists[w].binary_search(&u).is_err() {
                return Err(FormatError::Asymmetric(u, w));
            }
            if u < w {
                edges.push((u, w));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let _ = write!(out, "{v}:");
        for (t, w) in g.neighbors(v).iter().enumerate() {
            let _ = write!(out, "{}{w}", if t == 0 { "" } else { "," });
        }
        out.push('\n');
    }
    out
}

/// All graphs in a graph6 file, one per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(parse_graph6).collect()
}

pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let bytes = line.trim().strip_prefix(">>graph6<<").unwrap_or(line.trim()).as_bytes();
    let bad = |m: &str| FormatError::Graph6(String::from(m));
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(bad("truncated vertex count")),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_hypercube, generate_petersen};

    #[test]
    fn k2_adjacency() {
        let g = load_graph("0:1\n1:0").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load_graph("# a path\n\n0: 1 # start\n1: 0, 2\n2: 1\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert_eq!(load_graph("0:0"), Err(FormatError::Graph(GraphError::Loop(0))));
        assert_eq!(load_graph("0:1\n1:"), Err(FormatError::Asymmetric(0, 1)));
        assert_eq!(load_graph("0:1,1\n1:0"), Err(FormatError::RepeatedNeighbor(0, 1)));
        assert_eq!(load_graph("0:2\n2:0"), Err(FormatError::MissingVertex(1)));
        assert_eq!(load_graph("0:1\n0:1\n1:0"), Err(FormatError::DuplicateVertex(0)));
        assert!(matches!(load_graph("x:1"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(load_graph("0:1\n1:0\n2:"), Err(FormatError::Graph(GraphError::Disconnected(2)))));
    }

    #[test]
    fn graph6_known_strings() {
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert_eq!(write_graph6(&generate_petersen()).len(), 9);
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.edge_count(), 6);
        let p3 = parse_graph6(">>graph6<<Bg").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
    }

    #[test]
    fn round_trips() {
        let q4 = generate_hypercube(4).unwrap();
        let text = write_adjacency_list(&q4);
        assert_eq!(load_graph(&text).unwrap(), q4);
        let g6 = write_graph6(&q4);
        assert_eq!(detect_format(&g6), InputFormat::Graph6);
        assert_eq!(load_graph(&g6).unwrap(), q4);
        let q7 = generate_hypercube(7).unwrap();
        let g6 = write_graph6(&q7);
        assert!(g6.starts_with('~'));
        assert_eq!(parse_graph6(&g6).unwrap(), q7);
    }
}
