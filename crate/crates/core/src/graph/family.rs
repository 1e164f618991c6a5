//! Named graph families, parsed from strings such as `friendship:5` or
//! `corona:(path:3),(complete:2)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Hypercube(usize),
    Friendship(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(text: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Syntax {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Splits `(a),(b)` at the top-level comma.
fn split_pair(text: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&text[..i], &text[i + 1..])),
            _ => {}
        }
    }
    None
}

fn unwrap_parens(text: &str) -> &str {
    let t = text.trim();
    t.strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t)
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let (kind, args) = text
            .split_once(':')
            .ok_or_else(|| syntax(text, "expected <kind>:<parameters>"))?;
        let ints = |expected: usize| -> Result<Vec<usize>, FamilyError> {
            let vals: Vec<usize> = args
                .split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| syntax(text, "parameters must be non-negative integers"))?;
            if vals.len() != expected {
                return Err(syntax(text, format!("{kind} takes {expected} parameter(s)")));
            }
            Ok(vals)
        };
        Ok(match kind.trim() {
            "complete" => FamilySpec::Complete(ints(1)?[0]),
            "complete_bipartite" => {
                let v = ints(2)?;
                FamilySpec::CompleteBipartite(v[0], v[1])
            }
            "path" => FamilySpec::Path(ints(1)?[0]),
            "cycle" => FamilySpec::Cycle(ints(1)?[0]),
            "star" => FamilySpec::Star(ints(1)?[0]),
            "hypercube" => FamilySpec::Hypercube(ints(1)?[0]),
            "friendship" => FamilySpec::Friendship(ints(1)?[0]),
            "corona" => {
                let (a, b) = split_pair(args)
                    .ok_or_else(|| syntax(text, "corona takes (G),(H)"))?;
                FamilySpec::Corona(
                    Box::new(unwrap_parens(a).parse()?),
                    Box::new(unwrap_parens(b).parse()?),
                )
            }
            other => return Err(syntax(text, format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Hypercube(k) => write!(f, "hypercube:{k}"),
            FamilySpec::Friendship(n) => write!(f, "friendship:{n}"),
            FamilySpec::Corona(g, h) => write!(f, "corona:({g}),({h})"),
        }
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            FamilySpec::Complete(n) => super::complete(*n),
            FamilySpec::CompleteBipartite(a, b) => super::complete_bipartite(*a, *b),
            FamilySpec::Path(n) => super::path(*n),
            FamilySpec::Cycle(n) => super::cycle(*n),
            FamilySpec::Star(n) => super::star(*n),
            FamilySpec::Hypercube(k) => super::hypercube(*k),
            FamilySpec::Friendship(n) => super::friendship(*n),
            FamilySpec::Corona(g, h) => Ok(super::corona(&g.build()?, &h.build()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for text in [
            "complete:4",
            "friendship:5",
            "complete_bipartite:2,3",
            "corona:(path:3),(complete:2)",
            "corona:(corona:(path:2),(complete:1)),(cycle:3)",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "corona:path:3,complete:2".parse::<FamilySpec>().unwrap(),
            "corona:(path:3),(complete:2)".parse().unwrap()
        );
    }

    #[test]
    fn build_checks_preconditions() {
        let g = "corona:(path:3),(complete:2)"
            .parse::<FamilySpec>()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.order(), 9);
        assert!("friendship:1".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "friendship", "friendship:x", "blob:3", "path:1,2", "corona:(path:3)"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
