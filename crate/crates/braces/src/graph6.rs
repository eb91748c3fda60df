//! graph6 interchange format, bit-exact with the published format
//! description: printable bytes offset by 63, upper-triangle adjacency bits
//! in column order x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) ...
//!
//! `decode(encode(g)) == g` for every graph, and `encode(decode(s)) == s`
//! for every canonical string (one that uses the shortest size header).

use crate::error::{Error, Graph6Kind, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT_N: u64 = 62;
const MAX_MEDIUM_N: u64 = 258_047;
const MAX_LONG_N: u64 = 68_719_476_735; // 2^36 - 1
/// Refuse to allocate adjacency structures past this order.
const MAX_DECODE_N: u64 = 1_000_000;

fn err(offset: usize, kind: Graph6Kind) -> Error {
    Error::Graph6 { offset, kind }
}

/// Parses one graph6 line into a graph.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, Graph6Kind::Truncated { expected: 1, actual: 0 }));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(i, Graph6Kind::IllegalByte(b)));
        }
    }
    let (n, header_len) = decode_order(bytes)?;
    if n > MAX_DECODE_N {
        return Err(err(0, Graph6Kind::TooLarge { n }));
    }
    let n = n as usize;
    if n == 0 {
        // The format admits the empty graph, this crate's Graph does not.
        return Err(err(0, Graph6Kind::TooLarge { n: 0 }));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let actual = bytes.len() - header_len;
    if actual < expected {
        return Err(err(bytes.len(), Graph6Kind::Truncated { expected, actual }));
    }
    if actual > expected {
        return Err(err(header_len + expected, Graph6Kind::TrailingBytes { extra: actual - expected }));
    }
    let data = &bytes[header_len..];
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte & (1 << (5 - (k % 6))) != 0 {
                edges.push((i, j));
            }
            k += 1;
            if k >= bits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero per the format; tolerate nonzero padding
    // silently to accept output of sloppy encoders? No: reject, it usually
    // signals corruption.
    for p in bits..expected * 6 {
        let byte = data[p / 6] - OFFSET;
        if byte & (1 << (5 - (p % 6))) != 0 {
            return Err(err(header_len + p / 6, Graph6Kind::IllegalByte(data[p / 6] + OFFSET)));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_order(bytes: &[u8]) -> Result<(u64, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as u64, 1));
    }
    if bytes.len() < 2 {
        return Err(err(1, Graph6Kind::Truncated { expected: 4, actual: bytes.len() }));
    }
    if bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), Graph6Kind::Truncated { expected: 4, actual: bytes.len() }));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as u64;
        }
        Ok((n, 4))
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), Graph6Kind::Truncated { expected: 8, actual: bytes.len() }));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as u64;
        }
        Ok((n, 8))
    }
}

/// Encodes a graph as a canonical graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n() as u64;
    if n > MAX_LONG_N {
        return Err(Error::Graph6EncodeTooLarge { n: g.n() });
    }
    let mut out = Vec::new();
    if n <= MAX_SHORT_N {
        out.push(n as u8 + OFFSET);
    } else if n <= MAX_MEDIUM_N {
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let n = g.n();
    let bits = n * (n - 1) / 2;
    let mut acc = 0u8;
    let mut filled = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, bits);
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
