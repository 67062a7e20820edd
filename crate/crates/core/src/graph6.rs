//! Bit-exact graph6 text I/O (short form, n <= 62).
//!
//! Layout: one printable header byte `n + 63`, then the upper triangle of
//! the adjacency matrix in column order — bit t runs over pairs (i, j) with
//! j = 1..n, i = 0..j-1 — packed big-endian into 6-bit groups, zero-padded,
//! each group emitted as `value + 63`. The parser is strict: every byte must
//! be in `0x3f..=0x7e`, the line must contain exactly the required number of
//! data bytes, and padding bits must be zero, so parse and write are exact
//! inverses.

use crate::error::Graph6Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;

/// Parses one graph6 line (without the trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let header = bytes[0];
    if !(OFFSET..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte {
            byte: header,
            offset: 0,
        });
    }
    if header == 126 {
        return Err(Graph6Error::UnsupportedSize { offset: 0 });
    }
    let n = (header - OFFSET) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < data_len {
        return Err(Graph6Error::Truncated {
            expected: data_len,
            found: data.len(),
        });
    }
    if data.len() > data_len {
        return Err(Graph6Error::TrailingData {
            offset: 1 + data_len,
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut pair = {
        let mut pairs = Vec::with_capacity(bit_count);
        for j in 1..n {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        pairs.into_iter()
    };
    for (idx, &byte) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte {
                byte,
                offset: 1 + idx,
            });
        }
        let value = byte - OFFSET;
        for shift in (0..6).rev() {
            let b = (value >> shift) & 1;
            if bit < bit_count {
                let (i, j) = pair.next().unwrap();
                if b == 1 {
                    edges.push((i, j));
                }
            } else if b != 0 {
                return Err(Graph6Error::BadPadding { offset: 1 + idx });
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("triangle pairs are in range"))
}

/// Encodes a graph as its canonical graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(Graph6Error::UnsupportedSize { offset: 0 });
    }
    let mut out = Vec::new();
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    // Hand encoding of K4 per the byte layout: header 'C' = 63 + 4; the six
    // triangle bits are all ones, 111111 -> 63, 63 + 63 = 126 = '~'.
    #[test]
    fn k4_round_trip() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn zero_vertices() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(write_graph6(&g).unwrap(), "?");
    }

    #[test]
    fn five_vertex_round_trip() {
        // "D?{" decodes to the star with center 4: bits 0000001111 over the
        // pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn c4_round_trips() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let text = write_graph6(&c4).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), c4);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("C\u{1f}"),
            Err(Graph6Error::InvalidByte {
                byte: 0x1f,
                offset: 1
            })
        );
        assert_eq!(
            parse_graph6("~??"),
            Err(Graph6Error::UnsupportedSize { offset: 0 })
        );
        // "A" header needs one data byte whose low 5 bits pad with zeros;
        // 'B' - 63 = 3 sets padding bits.
        assert_eq!(
            parse_graph6("AB"),
            Err(Graph6Error::BadPadding { offset: 1 })
        );
    }

    #[test]
    fn writer_rejects_oversize() {
        let g = Graph::empty(63);
        assert_eq!(
            write_graph6(&g),
            Err(Graph6Error::UnsupportedSize { offset: 0 })
        );
    }
}
