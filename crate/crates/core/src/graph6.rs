//! graph6 codec: the printable encoding of the upper adjacency triangle used
//! by the usual enumeration tools (one graph per line).
//!
//! Supported orders are 0..=258047 (one-byte and three-byte size headers);
//! the eight-byte header for larger graphs is rejected.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;
const MAX_N: usize = 258_047;

/// Non-fatal decode findings; the graph is still returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Warning {
    /// Padding bits after the last triangle bit were not all zero.
    NonZeroPadding,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn triangle_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Encode a graph as a canonical-length graph6 line (no trailing newline).
pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(err(format!("order {n} exceeds the supported maximum {MAX_N}")));
    }
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(OFFSET + n as u8);
    } else {
        bytes.push(LONG_FORM);
        bytes.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        bytes.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        bytes.push(OFFSET + (n & 0x3f) as u8);
    }
    let nbits = if n == 0 { 0 } else { triangle_bits(n) };
    let mut acc = 0u8;
    let mut filled = 0;
    let mut emitted = 0;
    // upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(OFFSET + acc);
                acc = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        bytes.push(OFFSET + acc);
        emitted += 6;
    }
    debug_assert!(emitted >= nbits && emitted < nbits + 6);
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Decode one graph6 line, surfacing non-fatal warnings.
pub fn graph6_decode_verbose(line: &str) -> Result<(Graph, Vec<Graph6Warning>)> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty line"));
    }
    for &b in bytes {
        if !(OFFSET..=LONG_FORM).contains(&b) {
            return Err(err(format!("byte {b} outside the graph6 range 63..=126")));
        }
    }
    let (n, body) = if bytes[0] == LONG_FORM {
        if bytes.len() >= 2 && bytes[1] == LONG_FORM {
            return Err(err("orders above 258047 (eight-byte header) are unsupported"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated size header"));
        }
        let n = (((bytes[1] - OFFSET) as usize) << 12)
            | (((bytes[2] - OFFSET) as usize) << 6)
            | ((bytes[3] - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    let nbits = if n == 0 { 0 } else { triangle_bits(n) };
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(err(format!(
            "truncated body: need {expected} bytes for order {n}, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(err(format!(
            "trailing data: order {n} takes {expected} body bytes, found {}",
            body.len()
        )));
    }
    let mut warnings = Vec::new();
    let mut edges = Vec::new();
    let mut bit_idx = 0;
    'outer: for &byte in body {
        let group = byte - OFFSET;
        for k in (0..6).rev() {
            let bit = group >> k & 1;
            if bit_idx >= nbits {
                if bit == 1 {
                    warnings.push(Graph6Warning::NonZeroPadding);
                    break 'outer;
                }
                continue;
            }
            if bit == 1 {
                let (u, v) = triangle_pos(bit_idx);
                edges.push((u, v));
            }
            bit_idx += 1;
        }
    }
    let g = Graph::from_edge_list(n, &edges)?;
    Ok((g, warnings))
}

/// Decode one graph6 line (warnings discarded).
pub fn graph6_decode(line: &str) -> Result<Graph> {
    graph6_decode_verbose(line).map(|(g, _)| g)
}

/// Map a column-major triangle bit index to its `(row, column)` pair.
fn triangle_pos(idx: usize) -> (usize, usize) {
    // column v holds bits [v(v-1)/2, v(v+1)/2)
    let mut v = (((8 * idx + 1) as f64).sqrt() as usize).div_ceil(2);
    while triangle_bits(v + 1) <= idx {
        v += 1;
    }
    while triangle_bits(v) > idx {
        v -= 1;
    }
    (idx - triangle_bits(v), v)
}

/// Iterate graph6 lines from a reader, yielding `(line_number, result)` for
/// every non-blank line. Line numbers are 1-based.
pub fn read_graph6_lines<R: std::io::BufRead>(
    reader: R,
) -> impl Iterator<Item = (usize, Result<Graph>)> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some((i + 1, graph6_decode(&l))),
            Err(e) => Some((i + 1, Err(err(format!("I/O error: {e}"))))),
        })
}
