//! Text formats: graph6 (nauty-compatible) and a plain edge list.
//!
//! graph6 stores `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! big-endian into 6-bit groups offset by 63. Edge lists are a header line
//! `n m` followed by `m` lines `u v`; `#` starts a comment.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";
const MEDIUM_LIMIT: usize = 258_047;
const LONG_LIMIT: u64 = 68_719_476_735;
/// Largest vertex count accepted from text input.
pub const MAX_READ_VERTICES: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty string")]
    EmptyGraph6,
    #[error("graph6: byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    InvalidByte { byte: u8, pos: usize },
    #[error("graph6: expected {expected} data bytes for {n} vertices, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    NonzeroPadding,
    #[error("graph6: vertex count {0} is too large")]
    TooLarge(u64),
    #[error("line {line}: {source}")]
    Graph6Line {
        line: usize,
        #[source]
        source: Box<FormatError>,
    },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Input format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_LIMIT {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        assert!(n as u64 <= LONG_LIMIT, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::EmptyGraph6);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::InvalidByte { byte, pos });
        }
    }
    let six = |b: u8| (b - 63) as u64;
    let (n, data) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(FormatError::WrongLength { n: 0, expected: 8, found: bytes.len() });
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(FormatError::WrongLength { n: 0, expected: 4, found: bytes.len() });
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[4..])
    };
    if n > MAX_READ_VERTICES as u64 {
        return Err(FormatError::TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::WrongLength { n, expected, found: data.len() });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Parses one graph6 string per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let g = from_graph6(line).map_err(|e| FormatError::Graph6Line {
            line: idx + 1,
            source: Box::new(e),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Writes `g` as an edge list: header `n m`, then edges `u v` with `u < v`
/// in ascending order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), FormatError> {
    let err = |msg: String| FormatError::EdgeList { line: line_no, msg };
    let mut it = line.split_whitespace();
    let (a, b) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(err(format!("expected two integers for {what}, got `{line}`"))),
    };
    let a = a.parse().map_err(|_| err(format!("invalid integer `{a}`")))?;
    let b = b.parse().map_err(|_| err(format!("invalid integer `{b}`")))?;
    Ok((a, b))
}

/// Parses one or more concatenated edge-list blocks.
pub fn parse_edge_list(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut lines = data_lines(text);
    let mut graphs = Vec::new();
    while let Some((header_line, header)) = lines.next() {
        let (n, m) = parse_pair(header_line, header, "header `n m`")?;
        if n > MAX_READ_VERTICES {
            return Err(FormatError::TooLarge(n as u64));
        }
        let mut edges = Vec::new();
        for k in 0..m {
            let (line_no, line) = lines.next().ok_or_else(|| FormatError::EdgeList {
                line: header_line,
                msg: format!("header promises {m} edges but input ends after {k}"),
            })?;
            edges.push((line_no, parse_pair(line_no, line, "edge `u v`")?));
        }
        let mut g = Graph::empty(n);
        for (line, (u, v)) in edges {
            if u >= n || v >= n {
                return Err(FormatError::Graph { line, source: GraphError::EdgeOutOfRange { u, v, n } });
            }
            if u == v {
                return Err(FormatError::Graph { line, source: GraphError::SelfLoop { v } });
            }
            g.insert_edge(u, v);
        }
        graphs.push(g);
    }
    Ok(graphs)
}

/// Guesses the format from the first non-blank line: graph6 if it decodes
/// as graph6, edge list otherwise.
pub fn detect_format(text: &str) -> Format {
    match text.lines().map(str::trim_end).find(|l| !l.is_empty()) {
        Some(line) if from_graph6(line).is_ok() => Format::Graph6,
        _ => Format::EdgeList,
    }
}

/// Reads every graph in `text`, inferring the format when `format` is `None`.
pub fn read_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>, FormatError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Graph6 => parse_graph6_lines(text),
        Format::EdgeList => parse_edge_list(text),
    }
}
