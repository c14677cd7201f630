//! Headerless graph6 encoding.
//!
//! The order is written as one byte `n + 63` (n ≤ 62) or `~` plus three
//! bytes (n ≤ 258047, capped here at 64). The body packs the upper triangle
//! column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte,
//! most significant bit first, zero padded.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;

fn check_byte(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::ByteOutOfRange { offset, byte })
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        check_byte(offset, b)?;
    }
    let (n, body) = if bytes[0] == 126 && bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLength { n: 0, expected: 8, found: bytes.len() });
        }
        (decode_order(&bytes[2..8]), &bytes[8..])
    } else if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength { n: 0, expected: 4, found: bytes.len() });
        }
        (decode_order(&bytes[1..4]), &bytes[4..])
    } else {
        (usize::from(bytes[0] - BIAS), &bytes[1..])
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { n, expected, found: body.len() });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and loop-free"))
}

fn decode_order(digits: &[u8]) -> usize {
    digits.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - BIAS))
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encode `g` under its current labelling (not an isomorphism invariant).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
