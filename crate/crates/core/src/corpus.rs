//! Graph corpora for the verifier.
//!
//! | spec                               | graphs                                   |
//! |------------------------------------|------------------------------------------|
//! | `all-connected:<=N`                | every connected labeled graph, orders 1..=N |
//! | `all-connected:N`                  | the same, order exactly N                |
//! | `friendship:A..B`                  | `F_A ..= F_B`                            |
//! | `hypercube:A..B`                   | `Q_A ..= Q_B`                            |
//! | `corona-pairs:(G),(H);(G),(H)`     | `G ∘ H` for each listed family pair      |
//! | `family:<family>;<family>`         | the listed families                      |
//! | `file:<path>`                      | one graph6 string per line               |
//!
//! Labeled enumeration does not deduplicate isomorphic graphs.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::graph6::{emit_graph6, parse_graph6};
use crate::graph::{FamilyError, FamilySpec, Graph};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot parse corpus {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path} line {line}: {source}")]
    Graph6 {
        path: PathBuf,
        line: usize,
        source: crate::graph::graph6::Graph6Error,
    },
    #[error("corpus of order {0} is too large to enumerate")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    AllConnected { min: usize, max: usize },
    Friendship { from: usize, to: usize },
    Hypercube { from: usize, to: usize },
    CoronaPairs(Vec<(FamilySpec, FamilySpec)>),
    Families(Vec<FamilySpec>),
    File(PathBuf),
}

/// Largest order accepted by `all-connected`: 2^28 edge subsets.
const MAX_ENUMERATED_ORDER: usize = 8;

/// One corpus graph with whatever structure its source knows about.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub label: String,
    pub graph: Graph,
    pub friendship: Option<usize>,
    pub hypercube: Option<usize>,
    pub corona: Option<(Graph, Graph)>,
}

impl CorpusItem {
    pub fn plain(graph: Graph) -> Self {
        CorpusItem {
            label: emit_graph6(&graph),
            graph,
            friendship: None,
            hypercube: None,
            corona: None,
        }
    }

    pub fn from_family(spec: &FamilySpec) -> Result<Self, FamilyError> {
        let graph = spec.build()?;
        let mut item = CorpusItem::plain(graph);
        item.label = spec.to_string();
        match spec {
            FamilySpec::Friendship(n) => item.friendship = Some(*n),
            FamilySpec::Hypercube(k) => item.hypercube = Some(*k),
            FamilySpec::Corona(g, h) => item.corona = Some((g.build()?, h.build()?)),
            _ => {}
        }
        Ok(item)
    }
}

fn syntax(text: &str, reason: impl Into<String>) -> CorpusError {
    CorpusError::Syntax {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn parse_range(text: &str, body: &str) -> Result<(usize, usize), CorpusError> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| syntax(text, format!("{s:?} is not a non-negative integer")))
    };
    match body.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(syntax(text, "empty range"));
            }
            Ok((a, b))
        }
        None => {
            let a = num(body)?;
            Ok((a, a))
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = CorpusError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let (kind, body) = text
            .split_once(':')
            .ok_or_else(|| syntax(text, "expected <kind>:<argument>"))?;
        Ok(match kind {
            "all-connected" => {
                let (min, max) = match body.strip_prefix("<=") {
                    Some(max) => (1, parse_range(text, max)?.0),
                    None => parse_range(text, body)?,
                };
                if min == 0 {
                    return Err(syntax(text, "orders start at 1"));
                }
                CorpusSpec::AllConnected { min, max }
            }
            "friendship" => {
                let (from, to) = parse_range(text, body)?;
                CorpusSpec::Friendship { from, to }
            }
            "hypercube" => {
                let (from, to) = parse_range(text, body)?;
                CorpusSpec::Hypercube { from, to }
            }
            "corona-pairs" => {
                let pairs = body
                    .split(';')
                    .map(|pair| {
                        let spec: FamilySpec = format!("corona:{}", pair.trim()).parse()?;
                        match spec {
                            FamilySpec::Corona(g, h) => Ok((*g, *h)),
                            _ => unreachable!(),
                        }
                    })
                    .collect::<Result<Vec<_>, CorpusError>>()?;
                CorpusSpec::CoronaPairs(pairs)
            }
            "family" => CorpusSpec::Families(
                body.split(';')
                    .map(|f| f.parse::<FamilySpec>().map_err(CorpusError::from))
                    .collect::<Result<_, _>>()?,
            ),
            "file" => CorpusSpec::File(PathBuf::from(body)),
            other => return Err(syntax(text, format!("unknown corpus kind {other:?}"))),
        })
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::AllConnected { min: 1, max } => write!(f, "all-connected:<={max}"),
            CorpusSpec::AllConnected { min, max } if min == max => write!(f, "all-connected:{min}"),
            CorpusSpec::AllConnected { min, max } => write!(f, "all-connected:{min}..{max}"),
            CorpusSpec::Friendship { from, to } => write!(f, "friendship:{from}..{to}"),
            CorpusSpec::Hypercube { from, to } => write!(f, "hypercube:{from}..{to}"),
            CorpusSpec::CoronaPairs(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|(g, h)| format!("({g}),({h})")).collect();
                write!(f, "corona-pairs:{}", parts.join(";"))
            }
            CorpusSpec::Families(fams) => {
                let parts: Vec<String> = fams.iter().map(ToString::to_string).collect();
                write!(f, "family:{}", parts.join(";"))
            }
            CorpusSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Every connected graph on `n` labeled vertices, in edge-mask order.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).expect("pairs are in range");
        g.is_connected().then_some(g)
    })
}

impl CorpusSpec {
    pub fn items(&self) -> Result<Vec<CorpusItem>, CorpusError> {
        match self {
            CorpusSpec::AllConnected { min, max } => {
                if *max > MAX_ENUMERATED_ORDER {
                    return Err(CorpusError::TooLarge(*max));
                }
                Ok((*min..=*max)
                    .flat_map(connected_graphs)
                    .map(CorpusItem::plain)
                    .collect())
            }
            CorpusSpec::Friendship { from, to } => (*from..=*to)
                .map(|n| Ok(CorpusItem::from_family(&FamilySpec::Friendship(n))?))
                .collect(),
            CorpusSpec::Hypercube { from, to } => (*from..=*to)
                .map(|k| Ok(CorpusItem::from_family(&FamilySpec::Hypercube(k))?))
                .collect(),
            CorpusSpec::CoronaPairs(pairs) => pairs
                .iter()
                .map(|(g, h)| {
                    let spec = FamilySpec::Corona(Box::new(g.clone()), Box::new(h.clone()));
                    Ok(CorpusItem::from_family(&spec)?)
                })
                .collect(),
            CorpusSpec::Families(fams) => fams
                .iter()
                .map(|f| Ok(CorpusItem::from_family(f)?))
                .collect(),
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
                    path: path.clone(),
                    source,
                })?;
                text.lines()
                    .enumerate()
                    .filter(|(_, l)| !l.trim().is_empty())
                    .map(|(i, l)| {
                        parse_graph6(l.trim())
                            .map(CorpusItem::plain)
                            .map_err(|source| CorpusError::Graph6 {
                                path: path.clone(),
                                line: i + 1,
                                source,
                            })
                    })
                    .collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Connected labeled graph counts by brute force over edge subsets with
    /// an independent union-find connectivity test.
    fn count_connected(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0..1u32 << pairs.len())
            .filter(|mask| {
                let mut parent: Vec<usize> = (0..n).collect();
                fn root(p: &mut [usize], x: usize) -> usize {
                    if p[x] == x { x } else { let r = root(p, p[x]); p[x] = r; r }
                }
                let mut parts = n;
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
                        if a != b {
                            parent[a] = b;
                            parts -= 1;
                        }
                    }
                }
                parts == 1
            })
            .count()
    }

    #[test]
    fn connected_counts() {
        // 1, 1, 4, 38, 728, 26704 connected labeled graphs
        for (n, expected) in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)] {
            assert_eq!(count_connected(n), expected);
            assert_eq!(connected_graphs(n).count(), expected);
        }
        let exact: CorpusSpec = "all-connected:4".parse().unwrap();
        assert_eq!(exact.items().unwrap().len(), 38);
        let upto: CorpusSpec = "all-connected:<=4".parse().unwrap();
        assert_eq!(upto.items().unwrap().len(), 44);
    }

    #[test]
    fn family_corpora() {
        let f: CorpusSpec = "friendship:2..3".parse().unwrap();
        let items = f.items().unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[1].friendship, Some(3));
        let c: CorpusSpec = "corona-pairs:(path:3),(complete:2);(cycle:4),(complete:1)"
            .parse()
            .unwrap();
        let items = c.items().unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].graph.order(), 9);
        assert_eq!(items[1].corona.as_ref().unwrap().1.order(), 1);
        assert_eq!(
            c.to_string(),
            "corona-pairs:(path:3),(complete:2);(cycle:4),(complete:1)"
        );
    }

    #[test]
    fn file_corpus() {
        let missing: CorpusSpec = "file:/definitely/missing".parse().unwrap();
        assert!(matches!(missing.items(), Err(CorpusError::Io { .. })));
        let dir = std::env::temp_dir().join(format!("symlab-corpus-{}", std::process::id()));
        std::fs::write(&dir, "A_\n\nBg\nC\n").unwrap();
        let spec = CorpusSpec::File(dir.clone());
        match spec.items() {
            Err(CorpusError::Graph6 { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        std::fs::write(&dir, "A_\n\nBg\n").unwrap();
        assert_eq!(spec.items().unwrap().len(), 2);
        std::fs::remove_file(dir).unwrap();
    }

    #[test]
    fn bad_specs() {
        for bad in ["nothing", "all-connected:x", "friendship:5..2", "what:1", "all-connected:0"] {
            assert!(bad.parse::<CorpusSpec>().is_err(), "{bad}");
        }
    }
}
