//! graph6 encoding: printable bytes 63..=126, a vertex-count header, then
//! the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), six bits per byte, big-endian.

use thiserror::Error;

use crate::graph::Graph;

const OPTIONAL_HEADER: &str = ">>graph6<<";
/// Largest order this decoder accepts. The 36-bit header form could name far
/// larger graphs, none of which fit in memory with dense rows.
pub const MAX_ORDER: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed byte 0x{byte:02x} at offset {offset}")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("truncated at offset {offset}: expected {expected} more byte(s)")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("order {0} exceeds the supported maximum")]
    TooLarge(u64),
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::MalformedByte { offset, byte: b }),
        None => Err(Graph6Error::Truncated { offset, expected: 1 }),
    }
}

fn read_order(bytes: &[u8], start: usize) -> Result<(u64, usize), Graph6Error> {
    let first = sixbits(bytes, start)?;
    if first < 63 {
        return Ok((first as u64, start + 1));
    }
    // 126 marks a long header: either 3 or 6 more six-bit groups.
    let second = match bytes.get(start + 1) {
        Some(126) => None,
        _ => Some(()),
    };
    let (skip, groups) = if second.is_some() { (1, 3) } else { (2, 6) };
    let mut n = 0u64;
    for i in 0..groups {
        n = (n << 6) | sixbits(bytes, start + skip + i)? as u64;
    }
    Ok((n, start + skip + groups))
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` and the optional
/// `>>graph6<<` header are accepted; anything else is an error with the
/// offending byte offset.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    from_graph6_bytes(text.as_bytes())
}

pub fn from_graph6_bytes(mut bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let start = if bytes.starts_with(OPTIONAL_HEADER.as_bytes()) {
        OPTIONAL_HEADER.len()
    } else {
        0
    };
    if bytes.len() == start {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = read_order(bytes, start)?;
    if n > MAX_ORDER as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if bytes.len() < pos + needed {
        // Report the first missing byte, after checking the ones present.
        for off in pos..bytes.len() {
            sixbits(bytes, off)?;
        }
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: pos + needed - bytes.len(),
        });
    }
    let mut g = Graph::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut bit = 0usize;
    while bit < total_bits {
        let chunk = sixbits(bytes, pos)?;
        for shift in (0..6).rev() {
            if bit == total_bits {
                if chunk & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(Graph6Error::TrailingGarbage { offset: pos });
                }
                break;
            }
            if chunk >> shift & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(Graph6Error::TrailingGarbage { offset: pos });
    }
    Ok(g)
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses every non-empty line of a graph6 file. Errors carry the 1-based
/// line number.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6(l.trim_end()).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    // Reference encodings produced by an independent graph6 implementation.
    #[test]
    fn matches_reference_encodings() {
        assert_eq!(to_graph6(&complete(1)), "@");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&complete(5)), "D~{");
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&path(6)), "EhCG");
        assert_eq!(to_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(to_graph6(&Graph::new(0)), "?");
        let e63 = to_graph6(&Graph::new(63));
        assert_eq!(&e63[..4], "~??~");
        assert_eq!(e63.len(), 4 + (63 * 62 / 2usize).div_ceil(6));
    }

    #[test]
    fn decodes_reference_encodings() {
        assert_eq!(from_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(from_graph6("C~").unwrap(), complete(4));
        let c5 = from_graph6("Dhc\n").unwrap();
        assert_eq!(c5.size(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), complete(4));
        // networkx's wheel puts the hub at 0
        let w = from_graph6("E|fG").unwrap();
        assert_eq!(w.degree(0), 5);
        assert_eq!(w.size(), 10);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            from_graph6("C "),
            Err(Graph6Error::MalformedByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            from_graph6("D~"),
            Err(Graph6Error::Truncated { offset: 2, expected: 1 })
        );
        assert_eq!(from_graph6("C~?"), Err(Graph6Error::TrailingGarbage { offset: 2 }));
        // K4 needs exactly six bits; a set padding bit is rejected
        assert_eq!(from_graph6("Bx"), Err(Graph6Error::TrailingGarbage { offset: 1 }));
        assert!(matches!(from_graph6("~~~~~~~~"), Err(Graph6Error::TooLarge(_))));
        assert!(matches!(from_graph6("~?"), Err(Graph6Error::Truncated { .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let g = cycle(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn parse_lines_reports_line_numbers() {
        let gs = parse_lines("C~\n\nDhc\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(parse_lines("C~\nC!\n").unwrap_err().0, 2);
    }
}
