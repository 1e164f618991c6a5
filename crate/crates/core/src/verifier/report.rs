use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    HypothesisNeverMet,
    BudgetExceeded,
    /// No violation found, but the check cannot confirm the claim either.
    NotRefuted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::HypothesisNeverMet => "hypothesis-never-met",
            Status::BudgetExceeded => "budget-exceeded",
            Status::NotRefuted => "not-refuted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    /// Corpus label of the graph, e.g. a family spec.
    pub label: String,
    pub values: serde_json::Value,
    /// CLI invocation recomputing the invariants of this graph.
    pub replay: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub corpus: String,
    pub graphs_checked: usize,
    pub hypothesis_met: usize,
    pub status: Status,
    pub informative: bool,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut line = format!(
            "{:<16} {:<21} {:>6} graphs, {:>6} met hypothesis  [{}]",
            self.theorem,
            self.status.to_string(),
            self.graphs_checked,
            self.hypothesis_met,
            self.corpus
        );
        if self.informative {
            line.push_str(" (informative)");
        }
        line
    }
}
