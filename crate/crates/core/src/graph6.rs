//! The graph6 interchange format for simple undirected graphs.
//!
//! A graph6 string is the vertex count `N(n)` followed by the upper triangle of
//! the adjacency matrix, read column by column (`x(0,1), x(0,2), x(1,2), ...`),
//! packed six bits per byte with the most significant bit first and every byte
//! offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count representable by the 8-byte header variant.
pub const MAX_VERTICES: usize = 68_719_476_735;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated input at offset {offset}: expected {expected} bytes in total")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in the final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph6 cannot encode multigraphs")]
    Multigraph,
    #[error("graph on {0} vertices exceeds the graph6 limit")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn byte_at(data: &[u8], offset: usize, base: usize, expected: usize) -> Result<u8, Graph6Error> {
    let byte = *data.get(offset).ok_or(Graph6Error::Truncated {
        offset: base + offset,
        expected: base + expected,
    })?;
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte {
            offset: base + offset,
            byte,
        });
    }
    Ok(byte - 63)
}

/// Parse one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted; reported offsets count from the start of `text`.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let first = byte_at(body, 0, base, 1)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        let second = byte_at(body, 1, base, 2)?;
        if second < 63 {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | byte_at(body, i, base, 4)? as usize;
            }
            (n, 4)
        } else {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | byte_at(body, i, base, 8)? as usize;
            }
            (n, 8)
        }
    };

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let expected = pos + data_len;
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                // Force the range check on every data byte, including padding-only ones.
                byte_at(body, pos + bit / 6, base, expected)?;
            }
            let byte = body[pos + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    pos += data_len;
    if data_len > 0 {
        let last = body[pos - 1] - 63;
        let pad = data_len * 6 - bits;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: base + pos - 1 });
        }
    }
    if body.len() > pos {
        return Err(Graph6Error::TrailingData { offset: base + pos });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Encode a simple graph; vertex order is preserved exactly.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if g.has_parallel_edges() {
        return Err(Graph6Error::Multigraph);
    }
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // Column-major upper triangle: position of x(u, v), u < v.
        let k = v * (v - 1) / 2 + u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_strings() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edges()), (2, &[(0, 1)][..]));
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.same_structure(&Graph::complete(4)));
        assert_eq!(write_graph6(&Graph::path(1)).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn petersen_matches_published_string() {
        // The Petersen graph in its usual labeling, as printed by nauty's tools.
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("C"), Err(Graph6Error::Truncated { offset: 1, expected: 2 }));
        assert_eq!(parse_graph6("A_x"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(
            parse_graph6("A\x20"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x20 })
        );
        // 'A' needs one data bit; 'A' + 63 + 1 sets a padding bit.
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert_eq!(
            parse_graph6(">>graph6<<C!"),
            Err(Graph6Error::InvalidByte { offset: 11, byte: b'!' })
        );
    }

    #[test]
    fn header_and_newline_are_accepted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn medium_header_round_trip() {
        let g = Graph::cycle(100);
        let s = write_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        let back = parse_graph6(&s).unwrap();
        assert!(back.same_structure(&g));
    }

    #[test]
    fn multigraphs_are_rejected() {
        let m = Graph::multigraph_from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(write_graph6(&m), Err(Graph6Error::Multigraph));
    }
}
