//! graph6 text encoding for small undirected graphs.
//!
//! Format: a length header (byte `63+n` for `n <= 62`, or `'~'` plus three
//! sextet bytes for larger n), then the upper-triangle adjacency bits in
//! column-major order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed six
//! bits per byte offset by 63, zero-padded to a byte boundary.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("graph6 record encodes no vertices")]
    ZeroVertices,
    #[error("graph6 record has {0} vertices, maximum supported is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    InvalidByte { byte: u8, pos: usize },
    #[error("record has {found} payload bytes, expected {expected} for {n} vertices")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits at end of record")]
    TrailingBits,
}

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decode one graph6 record. A leading `">>graph6<<"` header and trailing
/// whitespace are accepted and ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\r', '\n', ' ', '\t']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, pos });
        }
    }

    // Length header: one byte for n <= 62, '~' + three sextets for n <= 258047.
    // Eight-byte headers ('~~' prefix) only occur beyond that, far over our cap.
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Eight-byte header: n >= 258048, reject with the decoded count
            // when all six sextets are present.
            let n = bytes
                .get(2..8)
                .map(|s| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize))
                .unwrap_or(usize::MAX);
            return Err(Graph6Error::TooManyVertices(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength {
                n: 0,
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (((bytes[1] - OFFSET) as usize) << 12)
            | (((bytes[2] - OFFSET) as usize) << 6)
            | ((bytes[3] - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }

    let expected = payload_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }

    let nbits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    'cols: for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - OFFSET) >> (5 - k % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'cols;
            }
        }
    }
    // Padding bits after the triangle must be zero.
    for k in nbits..expected * 6 {
        if (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::TrailingBits);
        }
    }

    match Graph::from_edges(n, &edges) {
        Ok(g) => Ok(g),
        // n and vertex indices are bounded by construction above.
        Err(GraphError::Empty) => Err(Graph6Error::ZeroVertices),
        Err(e) => unreachable!("graph6 decode produced invalid edges: {e}"),
    }
}

/// Encode a graph as a single graph6 record (no header, zero padding).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
