//! Text formats: a plain edge list and the graph6 encoding.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! into 6-bit big-endian chunks offset by 63, after a variable-length order
//! header (printable characters 63..=126 throughout).

use crate::graph::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    Empty,
    MalformedLine { line: usize, content: String },
    MissingEdges { expected: usize, found: usize },
    TrailingContent { line: usize },
    Graph(GraphError),
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::Empty => write!(f, "empty edge list"),
            EdgeListError::MalformedLine { line, content } => {
                write!(f, "line {line}: malformed: {content:?}")
            }
            EdgeListError::MissingEdges { expected, found } => {
                write!(f, "expected {expected} edge lines, found {found}")
            }
            EdgeListError::TrailingContent { line } => {
                write!(f, "line {line}: content after the declared edges")
            }
            EdgeListError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EdgeListError {}

impl From<GraphError> for EdgeListError {
    fn from(e: GraphError) -> Self {
        EdgeListError::Graph(e)
    }
}

/// Parses `"n m"` followed by `m` lines `"u v"`; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(EdgeListError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), 1, header)?;
    let m: usize = parse_field(parts.next(), 1, header)?;
    if parts.next().is_some() {
        return Err(EdgeListError::MalformedLine { line: 1, content: header.to_string() });
    }

    let mut g = Graph::empty(n)?;
    let mut found = 0;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if found == m {
            return Err(EdgeListError::TrailingContent { line: line_no });
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line_no, line)?;
        let v: usize = parse_field(parts.next(), line_no, line)?;
        if parts.next().is_some() {
            return Err(EdgeListError::MalformedLine { line: line_no, content: line.to_string() });
        }
        g.add_edge(u, v)?;
        found += 1;
    }
    if found < m {
        return Err(EdgeListError::MissingEdges { expected: m, found });
    }
    Ok(g)
}

fn parse_field(field: Option<&str>, line: usize, content: &str) -> Result<usize, EdgeListError> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| EdgeListError::MalformedLine { line, content: content.to_string() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    InvalidChar { index: usize, byte: u8 },
    UnsupportedOrder(usize),
    Truncated { expected: usize, found: usize },
    TrailingChars { expected: usize, found: usize },
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidChar { index, byte } => {
                write!(f, "invalid graph6 byte {byte:#04x} at index {index}")
            }
            Graph6Error::UnsupportedOrder(n) => {
                write!(f, "graph6 order {n} outside the supported range 1..={MAX_VERTICES}")
            }
            Graph6Error::Truncated { expected, found } => {
                write!(f, "truncated graph6 string: expected {expected} characters, found {found}")
            }
            Graph6Error::TrailingChars { expected, found } => {
                write!(f, "graph6 string too long: expected {expected} characters, found {found}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits in graph6 string"),
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Decodes one graph6-encoded graph, bit-exactly per the standard format.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { index, byte: b });
        }
    }

    // order header: 1 char for n <= 62, '~' + 3 chars for n <= 258047,
    // '~~' + 6 chars beyond that
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated { expected: 8, found: bytes.len() });
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }

    let bit_count = n * (n - 1) / 2;
    let data_chars = bit_count.div_ceil(6);
    let expected = header_len + data_chars;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingChars { expected, found: bytes.len() });
    }

    let bit = |pos: usize| -> bool {
        let b = bytes[header_len + pos / 6] - 63;
        b >> (5 - pos % 6) & 1 != 0
    };
    // trailing padding must be zero
    for pos in bit_count..data_chars * 6 {
        if bit(pos) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    let mut g = Graph::empty(n).expect("order validated");
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                g.add_edge(i, j).expect("indices in range");
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in graph6; inverse of [`parse_graph6`].
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
