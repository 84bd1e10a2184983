//! graph6 codec (bit-exact, including padding-bit zeroing) and a plain-text
//! edge-list reader.
//!
//! The edge-list form is one `u v` pair per line, 0-indexed; blank lines and
//! lines starting with `#` are ignored, and the vertex count is inferred as
//! the largest label plus one.

use crate::error::Error;
use crate::graph::Graph;

const OPTIONAL_HEADER: &str = ">>graph6<<";

/// Encodes a graph in graph6. Orders up to 62 use the one-byte size form,
/// orders up to 258047 the four-byte form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        panic!("graph6 serialization supports at most 258047 vertices");
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 string (optionally prefixed with `>>graph6<<`).
/// Errors carry the byte offset of the offending input position.
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let mut pos = 0usize;
    let bytes = trimmed.as_bytes();
    if trimmed.starts_with(OPTIONAL_HEADER) {
        pos += OPTIONAL_HEADER.len();
    }

    let err = |offset: usize, reason: String| Error::Graph6 { offset, reason };
    let byte_at = |i: usize| -> Result<u8, Error> {
        bytes
            .get(i)
            .copied()
            .ok_or_else(|| err(i, "unexpected end of input".into()))
    };
    let check_range = |i: usize, b: u8| -> Result<u8, Error> {
        if (63..=126).contains(&b) {
            Ok(b - 63)
        } else {
            Err(err(i, format!("byte {b:#04x} outside the graph6 range 63..=126")))
        }
    };

    // size field
    let b0 = byte_at(pos)?;
    let n: usize = if b0 == 126 {
        let b1 = byte_at(pos + 1)?;
        if b1 == 126 {
            return Err(err(pos + 1, "8-byte size form is not supported".into()));
        }
        let v1 = check_range(pos + 1, b1)? as usize;
        let v2 = check_range(pos + 2, byte_at(pos + 2)?)? as usize;
        let v3 = check_range(pos + 3, byte_at(pos + 3)?)? as usize;
        pos += 4;
        (v1 << 12) | (v2 << 6) | v3
    } else {
        let v = check_range(pos, b0)? as usize;
        pos += 1;
        v
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let have = bytes.len() - pos;
    if have < nbytes {
        return Err(err(
            bytes.len(),
            format!("truncated payload: expected {nbytes} bytes, found {have}"),
        ));
    }
    if have > nbytes {
        return Err(err(pos + nbytes, "trailing data after graph payload".into()));
    }

    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    let mut col = 1usize;
    let mut row = 0usize;
    for i in 0..nbytes {
        let v = check_range(pos + i, bytes[pos + i])?;
        for shift in (0..6).rev() {
            let bit = (v >> shift) & 1;
            if bit_idx < nbits {
                if bit == 1 {
                    g.add_edge(row, col).expect("triangle index is in range");
                }
                row += 1;
                if row == col {
                    col += 1;
                    row = 0;
                }
                bit_idx += 1;
            } else if bit != 0 {
                return Err(err(pos + i, "nonzero padding bits".into()));
            }
        }
    }
    Ok(g)
}

/// Parses the plain-text edge-list convenience format.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_label: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut tokens = s.split_whitespace();
        let parse_tok = |tok: Option<&str>| -> Result<usize, Error> {
            let tok = tok.ok_or_else(|| Error::EdgeList {
                line,
                reason: "expected two vertex labels".into(),
            })?;
            tok.parse::<usize>().map_err(|_| Error::EdgeList {
                line,
                reason: format!("invalid vertex label {tok:?}"),
            })
        };
        let u = parse_tok(tokens.next())?;
        let v = parse_tok(tokens.next())?;
        if tokens.next().is_some() {
            return Err(Error::EdgeList {
                line,
                reason: "expected exactly two vertex labels".into(),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line,
                reason: format!("self-loop at vertex {u}"),
            });
        }
        max_label = Some(max_label.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n = max_label.map_or(0, |m| m + 1);
    Graph::from_edges(n, &edges)
}

/// Renders a graph in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
