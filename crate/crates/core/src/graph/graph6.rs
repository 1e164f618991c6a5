//! graph6 encoding (upper triangle, column by column, 6 bits per byte).

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    Trailing(usize),
    #[error("non-zero padding bits")]
    Padding,
    #[error("graph with zero vertices")]
    ZeroOrder,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u64, Graph6Error> {
    let b = bytes[at];
    if !(63..=126).contains(&b) {
        return Err(err(at, Graph6ErrorKind::BadByte(b)));
    }
    Ok(u64::from(b - 63))
}

fn parse_order(bytes: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let need = |len: usize| {
        if bytes.len() < start + len {
            Err(err(
                bytes.len(),
                Graph6ErrorKind::Truncated {
                    expected: start + len,
                    found: bytes.len(),
                },
            ))
        } else {
            Ok(())
        }
    };
    need(1)?;
    if bytes[start] != 126 {
        return Ok((sixbits(bytes, start)? as usize, start + 1));
    }
    need(2)?;
    let (width, first) = if bytes[start + 1] == 126 {
        (6, start + 2)
    } else {
        (3, start + 1)
    };
    need(first - start + width)?;
    let mut n = 0u64;
    for i in first..first + width {
        n = (n << 6) | sixbits(bytes, i)?;
    }
    Ok((n as usize, first + width))
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    if bytes.len() == start {
        return Err(err(start, Graph6ErrorKind::Empty));
    }
    let (n, body) = parse_order(bytes, start)?;
    if n == 0 {
        return Err(err(start, Graph6ErrorKind::ZeroOrder));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < body + nbytes {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated {
                expected: body + nbytes,
                found: bytes.len(),
            },
        ));
    }
    if bytes.len() > body + nbytes {
        return Err(err(
            body + nbytes,
            Graph6ErrorKind::Trailing(bytes.len() - body - nbytes),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let at = body + k / 6;
            let word = sixbits(bytes, at)?;
            if word >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body + nbytes - 1;
        let pad = 6 - nbits % 6;
        if sixbits(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(err(last, Graph6ErrorKind::Padding));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("decoded edges are in range"))
}

/// Encodes a graph in canonical graph6 form (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
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
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
