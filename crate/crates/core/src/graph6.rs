//! The graph6 text format, as produced by nauty's `showg`/`geng`.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per
//! printable byte (value + 63) and zero padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Decoding failure; `position` is the 0-based byte offset in the line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    BadByte { position: usize, byte: u8 },
    #[error("line ends at position {position}, {expected} bytes expected")]
    Truncated { position: usize, expected: usize },
    #[error("trailing bytes starting at position {position}")]
    Trailing { position: usize },
    #[error("padding bit set in byte at position {position}")]
    PaddingSet { position: usize },
    #[error("graph6 line encodes a graph with no vertices")]
    NoVertices,
}

const BIAS: u8 = 63;

fn size_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Packs a bit stream (most significant first) into graph6 bytes.
pub(crate) fn pack_bits<I: IntoIterator<Item = bool>>(bits: I, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut k = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        k += 1;
        if k == 6 {
            out.push(acc + BIAS);
            acc = 0;
            k = 0;
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + BIAS);
    }
}

/// Encodes without the trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    size_prefix(n, &mut out);
    let bits = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    pack_bits(bits.map(|(i, j)| g.has_edge(i, j)), &mut out);
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one line. A single trailing `\n` (or `\r\n`) is tolerated.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { position, byte });
        }
    }
    let six = |i: usize| (bytes[i] - BIAS) as usize;
    let need = |len: usize| -> Result<(), Graph6Error> {
        if bytes.len() < len {
            Err(Graph6Error::Truncated {
                position: bytes.len(),
                expected: len,
            })
        } else {
            Ok(())
        }
    };
    let (n, start) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() > 1 && bytes[1] == 126 {
        need(8)?;
        ((2..8).fold(0, |acc, i| (acc << 6) | six(i)), 8)
    } else {
        need(4)?;
        ((1..4).fold(0, |acc, i| (acc << 6) | six(i)), 4)
    };
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    need(start + nbytes)?;
    if bytes.len() > start + nbytes {
        return Err(Graph6Error::Trailing {
            position: start + nbytes,
        });
    }
    let bit = |k: usize| (six(start + k / 6) >> (5 - k % 6)) & 1 == 1;
    if nbits % 6 != 0 {
        let last = start + nbytes - 1;
        let pad = 6 - nbits % 6;
        if six(last) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::PaddingSet { position: last });
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 bit layout yields a simple graph"))
}

/// Decodes a multi-line document, skipping blank lines and an optional
/// `>>graph6<<` header. Errors carry the 1-based line number.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim_end_matches('\r');
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        let g = decode(line).map_err(|e| GraphError::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference strings below were produced by networkx.to_graph6_bytes.
    #[test]
    fn reference_vectors() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        let p5 = Graph::new(5, (1..5).map(|i| (i - 1, i))).unwrap();
        assert_eq!(encode(&p5), "DhC");
        let star7 = Graph::new(7, (1..7).map(|i| (0, i))).unwrap();
        assert_eq!(encode(&star7), "FsaC?");
        let c7 = Graph::new(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(encode(&c7), "FhCKG");
        let p70 = Graph::new(70, (1..70).map(|i| (i - 1, i))).unwrap();
        assert!(encode(&p70).starts_with("~?@EhCGGC@"));
        assert_eq!(decode(&encode(&p70)).unwrap(), p70);
    }

    #[test]
    fn petgraph_vector() {
        // a-c, a-e, b-d, d-e
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc\n").unwrap(), g);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode("C~ "),
            Err(Graph6Error::BadByte {
                position: 2,
                byte: b' '
            })
        );
        assert_eq!(
            decode("C\x7f"),
            Err(Graph6Error::BadByte {
                position: 1,
                byte: 0x7f
            })
        );
        assert_eq!(decode("C~~"), Err(Graph6Error::Trailing { position: 2 }));
        assert_eq!(
            decode("D"),
            Err(Graph6Error::Truncated {
                position: 1,
                expected: 3
            })
        );
        // n = 5 has 10 bits; the final two bits of byte 2 are padding
        assert_eq!(decode("DQd"), Err(Graph6Error::PaddingSet { position: 2 }));
        assert_eq!(decode("?"), Err(Graph6Error::NoVertices));
        assert!(matches!(decode("~?"), Err(Graph6Error::Truncated { .. })));
    }

    #[test]
    fn multi_line_documents() {
        let gs = decode_lines(">>graph6<<C~\n\n@\r\n").unwrap();
        assert_eq!(gs.len(), 2);
        match decode_lines("C~\nC~~\n") {
            Err(GraphError::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("position 2"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
