//! The standard graph6 text encoding: 6-bit chunks offset by 63, adjacency
//! bits in upper-triangle column-major order.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        // 18-bit form for 63 <= n <= 258047
        out.push(b'~');
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string; an optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            offset: base,
            msg: "empty graph6 string".into(),
        });
    }
    let sextet = |pos: usize| -> Result<u64> {
        let b = bytes[pos];
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Parse {
                offset: base + pos,
                msg: format!("invalid graph6 byte 0x{b:02x}"),
            });
        }
        Ok((b - OFFSET) as u64)
    };

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Parse {
                offset: base,
                msg: "36-bit vertex counts exceed the 64-vertex capacity".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Parse {
                offset: base,
                msg: "truncated 18-bit vertex count".into(),
            });
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        (n as usize, 4)
    } else {
        (sextet(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nchunks = nbits.div_ceil(6);
    if bytes.len() != pos + nchunks {
        return Err(Error::Parse {
            offset: base + bytes.len().min(pos + nchunks),
            msg: format!(
                "expected {} adjacency bytes for n={n}, found {}",
                nchunks,
                bytes.len() - pos
            ),
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    let mut chunk = 0u64;
    let mut avail = 0usize;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                chunk = sextet(pos)?;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if (chunk >> avail) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            bit_index += 1;
        }
    }
    let _ = bit_index;
    // trailing padding must be zero
    if avail > 0 && chunk & ((1 << avail) - 1) != 0 {
        return Err(Error::Parse {
            offset: base + pos - 1,
            msg: "nonzero padding bits".into(),
        });
    }
    Graph::from_adjacency(adj)
}
