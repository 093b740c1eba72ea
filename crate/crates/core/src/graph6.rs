//! graph6 encoding.
//!
//! Layout: a size header N(n), then the upper triangle of the adjacency
//! matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six
//! bits per byte, most significant bit first, every byte offset by 63 and
//! the final byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER_PREFIX: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 record. A leading `>>graph6<<` marker and a trailing
/// line terminator are accepted; anything else outside the record is not.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(malformed(format!("non-printable or out-of-range byte at offset {pos}")));
    }
    let (n, body) = parse_header(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "bit region has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - OFFSET;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed("non-zero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
    match bytes {
        [] => Err(malformed("empty record")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte size header"));
            }
            let n = value(&rest[..6]);
            if n <= 258_047 {
                return Err(malformed("non-minimal 8-byte size header"));
            }
            Ok((n, &rest[6..]))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte size header"));
            }
            let n = value(&rest[..3]);
            if n <= 62 {
                return Err(malformed("non-minimal 4-byte size header"));
            }
            Ok((n, &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - OFFSET) as usize, rest)),
    }
}
