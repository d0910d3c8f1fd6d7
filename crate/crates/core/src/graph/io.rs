//! graph6 and plain edge-list encodings.
//!
//! graph6 packs the upper triangle column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) into 6-bit groups offset by 63. Vertex counts up to
//! 62 take one byte, up to 258047 take `~` plus three bytes, and larger
//! counts take `~~` plus six bytes.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(syntax(offset, format!("invalid graph6 byte 0x{b:02x}"))),
        None => Err(syntax(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// newline are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
    let start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut pos = start;
    let n = if bytes.get(pos) == Some(&b'~') {
        if bytes.get(pos + 1) == Some(&b'~') {
            pos += 2;
            let mut n = 0usize;
            for _ in 0..6 {
                n = (n << 6) | sextet(bytes, pos)? as usize;
                pos += 1;
            }
            n
        } else {
            pos += 1;
            let mut n = 0usize;
            for _ in 0..3 {
                n = (n << 6) | sextet(bytes, pos)? as usize;
                pos += 1;
            }
            n
        }
    } else {
        let n = sextet(bytes, pos)? as usize;
        pos += 1;
        n
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = pos + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(syntax(
            bytes.len().min(expected),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, pos + bit / 6)?;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = sextet(bytes, expected - 1)?;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(syntax(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// One `u w` line per edge with `u < w`, zero-based, lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, w) in g.edges() {
        writeln!(out, "{u} {w}").expect("writing to a String");
    }
    out
}

/// Parses an edge list. Blank lines and `#` comments are skipped. Without an
/// explicit vertex count, the graph has `max index + 1` vertices.
pub fn from_edge_list(text: &str, vertices: Option<usize>) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            let mut fields = content.split_whitespace();
            let mut next = || -> Result<usize, ParseError> {
                let f = fields
                    .next()
                    .ok_or_else(|| syntax(offset, "expected two vertex indices"))?;
                f.parse()
                    .map_err(|_| syntax(offset, format!("invalid vertex index {f:?}")))
            };
            let (u, w) = (next()?, next()?);
            if fields.next().is_some() {
                return Err(syntax(offset, "more than two fields on an edge line"));
            }
            edges.push((u, w));
        }
        offset += line.len();
    }
    let n = vertices.unwrap_or_else(|| edges.iter().map(|&(u, w)| u.max(w) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, edges)?)
}
