//! graph6 codec, short form only (at most 62 vertices).
//!
//! Byte 0 is `n + 63`. The upper-triangle bits `x(i, j)`, `i < j`, follow in
//! column order (`j = 1..n`, then `i = 0..j`), padded with zeros to a multiple
//! of six and packed most-significant-bit first into bytes `group + 63`.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form graph6 (more than {MAX_GRAPH6_VERTICES} vertices) is not supported")]
    LongForm,
    #[error("graph6 payload for {n} vertices needs {expected} bytes, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-zero padding bits in graph6 payload")]
    Padding,
    #[error("cannot encode a graph on {0} vertices in short-form graph6")]
    TooLarge(usize),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    let payload = &bytes[1..];
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: payload.len(),
        });
    }

    let mut rows = vec![0u64; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = payload[bit / 6] - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let group = payload[bit / 6] - 63;
        if group & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(Graph::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::build(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
        assert_eq!(parse_graph6("Bw\n").unwrap(), k3);
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), k3);
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn known_five_vertex_string() {
        // a-c, a-e, b-d, d-e
        let g = Graph::build(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("B w"),
            Err(Graph6Error::InvalidByte {
                offset: 1,
                byte: b' '
            })
        );
        assert_eq!(parse_graph6("~?@A"), Err(Graph6Error::LongForm));
        assert_eq!(
            parse_graph6("D"),
            Err(Graph6Error::Length {
                n: 5,
                expected: 2,
                found: 0
            })
        );
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::Padding));
        let big = Graph::empty(63).unwrap();
        assert_eq!(to_graph6(&big), Err(Graph6Error::TooLarge(63)));
    }

    #[test]
    fn largest_short_form() {
        let g = Graph::empty(62).unwrap().complement();
        let s = to_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 125);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
