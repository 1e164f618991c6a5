//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-indexed)
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are ignored.

use std::fmt::Write;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge list line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

fn fail(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError {
        line,
        message: message.into(),
    }
}

fn two_ints(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = it
            .next()
            .ok_or_else(|| fail(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| fail(line, format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(fail(line, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut rows = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    });
    let (header_line, header) = rows.next().ok_or_else(|| fail(1, "missing \"n m\" header"))?;
    let (n, m) = two_ints(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in rows {
        if edges.len() == m {
            return Err(fail(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = two_ints(line, body)?;
        if u >= n || v >= n {
            return Err(fail(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(fail(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() < m {
        return Err(fail(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| match e {
        GraphError::Empty => fail(header_line, "graph must have at least one vertex"),
        other => fail(header_line, other.to_string()),
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn parses_with_comments() {
        let text = "# path on three vertices\n3 2\n0 1  # first\n\n1 2\n";
        assert_eq!(parse_edge_list(text).unwrap(), path(3).unwrap());
    }

    #[test]
    fn round_trip() {
        let g = path(5).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_input_reports_line() {
        assert_eq!(parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3 1\n0 3\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n# c\n1 1\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3 1\n0 1\n1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_edge_list("3 2\n0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("# only\n").unwrap_err().line, 1);
        assert_eq!(parse_edge_list("0 0\n").unwrap_err().line, 1);
    }
}
