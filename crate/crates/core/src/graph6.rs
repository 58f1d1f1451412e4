//! graph6 text format: one printable line per graph, 6 bits per byte.
//!
//! Layout for `n <= 62`: a single header byte `n + 63`, then the
//! upper-triangle adjacency bits in column-major order (pair `(i, j)` with
//! `i < j` ordered by `j` then `i`), packed big-endian into 6-bit groups,
//! each group offset by 63. The final group is padded with zero bits.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph order {n} unsupported (must be 1..=32)")]
    UnsupportedOrder { n: usize },
    #[error("graph6 string truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    DirtyPadding { offset: usize },
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one graph6 line into a [`Graph`].
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let b0 = bytes[0];
    if !(63..=126).contains(&b0) {
        return Err(Graph6Error::InvalidByte {
            offset: 0,
            byte: b0,
        });
    }
    if b0 == 126 {
        // Multi-byte order header; anything it can encode is over our cap,
        // but decode it so the error names the actual order.
        let n = parse_long_order(bytes)?;
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let n = (b0 - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected });
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: i, byte: b });
        }
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits below the last data bit must be zero.
    if !k.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::DirtyPadding {
                offset: expected - 1,
            });
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

fn parse_long_order(bytes: &[u8]) -> Result<usize, Graph6Error> {
    let (skip, width) = if bytes.len() > 1 && bytes[1] == 126 {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < skip + width {
        return Err(Graph6Error::Truncated {
            expected: skip + width,
            found: bytes.len(),
        });
    }
    let mut n = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(skip).take(width) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: i, byte: b });
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok(n)
}

/// Encodes a graph as its canonical-length graph6 line.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Packs a precomputed column-major bit body into a graph6 line.
pub(crate) fn pack_graph6(n: usize, bits: &[u8]) -> String {
    debug_assert_eq!(bits.len(), n * (n - 1) / 2);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    for chunk in bits.chunks(6) {
        let mut acc = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            acc |= b << (5 - i);
        }
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the lines of a graph6 file, skipping the optional `>>graph6<<`
/// header and blank lines. Yields `(1-based line number, parse result)`.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push((idx + 1, parse_graph6(line)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn parse_known_encodings() {
        // "Cl": hand-encoded 4-cycle. Pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
        // give bits 101101 = 45, and 45 + 63 = 108 = 'l'.
        let g = parse_graph6("Cl").unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        // "@": K1.
        assert_eq!(parse_graph6("@").unwrap(), Graph::edgeless(1).unwrap());
        // "A?": two vertices, single zero bit padded out.
        assert_eq!(parse_graph6("A?").unwrap(), Graph::edgeless(2).unwrap());
    }

    #[test]
    fn emit_known_encodings() {
        assert_eq!(emit_graph6(&Graph::cycle(4).unwrap()), "Cl");
        assert_eq!(emit_graph6(&Graph::edgeless(1).unwrap()), "@");
        assert_eq!(emit_graph6(&Graph::edgeless(2).unwrap()), "A?");
    }

    #[test]
    fn round_trip_is_identity() {
        assert_eq!(emit_graph6(&parse_graph6("Cl").unwrap()), "Cl");
        for g in [
            Graph::complete(7).unwrap(),
            Graph::path(6).unwrap(),
            Graph::from_edges(5, &[(0, 3), (1, 4)]).unwrap(),
            Graph::edgeless(32).unwrap(),
            Graph::complete(32).unwrap(),
        ] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn distinct_errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("?"),
            Err(Graph6Error::UnsupportedOrder { n: 0 })
        );
        // 'n' - 63 = 47 > 32.
        assert_eq!(
            parse_graph6("not-a-graph6!!"),
            Err(Graph6Error::UnsupportedOrder { n: 47 })
        );
        assert_eq!(
            parse_graph6("C!"),
            Err(Graph6Error::InvalidByte {
                offset: 1,
                byte: b'!'
            })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("Cll"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        // n = 2 has one data bit; 'C' = 63 + 4 sets a padding bit.
        assert_eq!(
            parse_graph6("AC"),
            Err(Graph6Error::DirtyPadding { offset: 1 })
        );
        // '~' starts a multi-byte order; "~??~" encodes n = 63.
        assert_eq!(
            parse_graph6("~??~"),
            Err(Graph6Error::UnsupportedOrder { n: 63 })
        );
    }

    #[test]
    fn file_reader_skips_header_and_blanks() {
        let text = ">>graph6<<@\n\nCl\nA?\n";
        let parsed = parse_graph6_lines(text);
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].0, 1);
        assert_eq!(parsed[1].0, 3);
        assert!(parsed.iter().all(|(_, r)| r.is_ok()));
    }

    #[test]
    fn induced_then_emit_matches_by_edges() {
        let g = parse_graph6("Cl").unwrap();
        let p3 = g.induced(VertexSet::from_vertices(&[0, 1, 2])).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&p3)).unwrap(), p3);
    }
}
