//! graph6 encoding and decoding.
//!
//! One byte `n + 63` for the order (this crate never needs the multi-byte
//! size form), then the upper triangle of the adjacency matrix in column
//! major order, packed six bits per byte, each byte offset by 63. Decoding
//! is strict: wrong length, out-of-range bytes, and nonzero padding bits
//! are all rejected, with the byte offset of the fault.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2 + 5) / 6
}

/// Encode a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decode a graph6 string.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::Parse {
        offset: 0,
        message: "empty input".into(),
    })?;
    if first == 126 {
        // multi-byte size form: necessarily n > 62, far past our cap
        return Err(Error::TooLarge { n: 63, cap: MAX_VERTICES });
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Parse {
            offset: 0,
            message: format!("invalid size byte {first}"),
        });
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, cap: MAX_VERTICES });
    }
    let expect = 1 + body_len(n);
    if bytes.len() < expect {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: format!("truncated: expected {expect} bytes for n={n}"),
        });
    }
    if bytes.len() > expect {
        return Err(Error::Parse {
            offset: expect,
            message: format!("trailing data: expected {expect} bytes for n={n}"),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0usize; // bit position within the upper triangle
    let total = n * n.saturating_sub(1) / 2;
    for (bi, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: 1 + bi,
                message: format!("invalid body byte {b}"),
            });
        }
        let group = b - 63;
        for k in 0..6 {
            let bit = group >> (5 - k) & 1;
            if pos < total {
                if bit == 1 {
                    // invert pos -> (i, j): column-major upper triangle
                    let (i, j) = triangle_coords(pos);
                    g.add_edge(i, j);
                }
            } else if bit != 0 {
                return Err(Error::Parse {
                    offset: 1 + bi,
                    message: "nonzero padding bits".into(),
                });
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Position `p` within the column-major upper triangle to its `(i, j)`, `i < j`.
fn triangle_coords(p: usize) -> (usize, usize) {
    let mut j = 1;
    let mut base = 0;
    while base + j <= p {
        base += j;
        j += 1;
    }
    (p - base, j)
}
