//! Runs each registered claim over a corpus and reports the outcome.
//!
//! Graphs are fanned out over the current rayon pool; results are reduced in
//! corpus order, so reports do not depend on the number of workers.

mod checks;
mod facts;
mod report;

use rayon::prelude::*;
use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::corpus::{CorpusError, CorpusItem, CorpusSpec};
use checks::{Aggregate, GraphCheck, Kind, Outcome, Verdict, CHECKS};
use facts::Facts;

pub use checks::CheckInfo;
pub use report::{Counterexample, Status, TheoremReport};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

/// Every registered check, in suite order.
pub fn checks() -> &'static [CheckInfo] {
    CHECKS
}

/// Group ids expanding to several checks.
const GROUPS: &[(&str, &[&str])] = &[
    ("Prop2.2", &["Prop2.2i", "Prop2.2ii"]),
    ("Prop2.3", &["Prop2.3i", "Prop2.3ii"]),
    ("Cor2.7", &["Cor2.7i", "Cor2.7ii"]),
];

pub fn find_check(id: &str) -> Option<&'static CheckInfo> {
    CHECKS
        .iter()
        .find(|c| c.id == id || c.aliases.contains(&id))
}

/// Resolves ids (or `default` for the whole suite), keeping the first
/// occurrence of each check.
pub fn resolve(ids: &[&str]) -> Result<Vec<&'static CheckInfo>, VerifyError> {
    let mut out: Vec<&'static CheckInfo> = Vec::new();
    let mut push = |c: &'static CheckInfo| {
        if !out.iter().any(|o| o.id == c.id) {
            out.push(c);
        }
    };
    for &id in ids {
        if id == "default" {
            CHECKS.iter().for_each(&mut push);
        } else if let Some((_, members)) = GROUPS.iter().find(|(g, _)| *g == id) {
            members.iter().for_each(|m| push(find_check(m).unwrap()));
        } else {
            push(find_check(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?);
        }
    }
    Ok(out)
}

/// Runs one check on `corpus`, or on its default corpus.
pub fn run_check(
    id: &str,
    corpus: Option<&CorpusSpec>,
    limit: u64,
) -> Result<TheoremReport, VerifyError> {
    Ok(run_suite(&[id], corpus, limit)?.remove(0))
}

/// Runs the listed checks. Checks sharing a corpus share its computed
/// invariants. Reports follow the order of `ids`.
pub fn run_suite(
    ids: &[&str],
    corpus: Option<&CorpusSpec>,
    limit: u64,
) -> Result<Vec<TheoremReport>, VerifyError> {
    let selected = resolve(ids)?;
    let mut specs: Vec<CorpusSpec> = Vec::new();
    let mut spec_of = Vec::with_capacity(selected.len());
    for check in &selected {
        let spec = match corpus {
            Some(spec) => spec.clone(),
            None => check.default_corpus.parse()?,
        };
        let at = match specs.iter().position(|s| *s == spec) {
            Some(at) => at,
            None => {
                specs.push(spec);
                specs.len() - 1
            }
        };
        spec_of.push(at);
    }

    let mut reports: Vec<Option<TheoremReport>> = vec![None; selected.len()];
    for (s, spec) in specs.iter().enumerate() {
        let items = spec.items()?;
        let facts: Vec<Facts> = items.iter().map(|i| Facts::new(i, limit)).collect();
        let members: Vec<usize> = (0..selected.len()).filter(|&c| spec_of[c] == s).collect();
        let graph_checks: Vec<(usize, GraphCheck)> = members
            .iter()
            .filter_map(|&c| match selected[c].kind {
                Kind::Graph(f) => Some((c, f)),
                Kind::Corpus(_) => None,
            })
            .collect();
        let verdicts: Vec<Vec<Outcome>> = facts
            .par_iter()
            .map(|f| graph_checks.iter().map(|(_, check)| check(f)).collect())
            .collect();
        for (k, &(c, _)) in graph_checks.iter().enumerate() {
            let column = verdicts.iter().map(|row| &row[k]);
            reports[c] = Some(reduce(selected[c], spec, &items, column));
        }
        for &c in &members {
            if let Kind::Corpus(check) = selected[c].kind {
                reports[c] = Some(aggregate_report(selected[c], spec, &items, check(&facts)));
            }
        }
    }
    Ok(reports.into_iter().map(|r| r.expect("every check ran")).collect())
}

fn counterexample(item: &CorpusItem, values: serde_json::Value) -> Counterexample {
    let graph6 = crate::graph::graph6::emit_graph6(&item.graph);
    Counterexample {
        replay: format!("symlab compute --g6 '{graph6}' --invariant all"),
        graph6,
        label: item.label.clone(),
        values,
    }
}

fn new_report(check: &CheckInfo, spec: &CorpusSpec, items: &[CorpusItem]) -> TheoremReport {
    TheoremReport {
        theorem: check.id.to_string(),
        corpus: spec.to_string(),
        graphs_checked: items.len(),
        hypothesis_met: 0,
        status: Status::HypothesisNeverMet,
        informative: check.informative,
        counterexample: None,
        notes: Vec::new(),
    }
}

fn settle(report: &mut TheoremReport, failed: bool, exceeded: usize, unsettled: bool) {
    report.status = if failed {
        Status::Counterexample
    } else if exceeded > 0 {
        Status::BudgetExceeded
    } else if unsettled {
        Status::NotRefuted
    } else if report.hypothesis_met > 0 {
        Status::Verified
    } else {
        Status::HypothesisNeverMet
    };
    if exceeded > 0 {
        report.notes.push(format!("{exceeded} graphs exceeded the search budget"));
    }
}

fn reduce<'v>(
    check: &CheckInfo,
    spec: &CorpusSpec,
    items: &[CorpusItem],
    verdicts: impl Iterator<Item = &'v Outcome>,
) -> TheoremReport {
    let mut report = new_report(check, spec, items);
    let mut exceeded = 0;
    let mut unsettled: Vec<(usize, &str)> = Vec::new();
    let mut noted: Vec<(usize, &str)> = Vec::new();
    for (i, v) in verdicts.enumerate() {
        match v {
            Err(_) => exceeded += 1,
            Ok(Verdict::Skip) => {}
            Ok(Verdict::Holds) => report.hypothesis_met += 1,
            Ok(Verdict::HoldsNoting(msg)) => {
                report.hypothesis_met += 1;
                noted.push((i, msg));
            }
            Ok(Verdict::Fails(values)) => {
                report.hypothesis_met += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(counterexample(&items[i], values.clone()));
                }
            }
            Ok(Verdict::Unsettled(msg)) => {
                report.hypothesis_met += 1;
                unsettled.push((i, msg));
            }
        }
    }
    for (what, list) in [("unsettled", &unsettled), ("noted", &noted)] {
        if let Some(&(i, msg)) = list.first() {
            report.notes.push(format!(
                "{} graphs {what}, first {}: {msg}",
                list.len(),
                items[i].label
            ));
        }
    }
    let failed = report.counterexample.is_some();
    settle(&mut report, failed, exceeded, !unsettled.is_empty());
    report
}

fn aggregate_report(
    check: &CheckInfo,
    spec: &CorpusSpec,
    items: &[CorpusItem],
    outcome: Result<Aggregate, BudgetExceeded>,
) -> TheoremReport {
    let mut report = new_report(check, spec, items);
    match outcome {
        Err(e) => {
            report.notes.push(e.to_string());
            settle(&mut report, false, 1, false);
        }
        Ok(agg) => {
            report.hypothesis_met = agg.met;
            report.notes = agg.notes;
            report.counterexample = agg.failure.map(|(i, v)| counterexample(&items[i], v));
            let failed = report.counterexample.is_some();
            settle(&mut report, failed, 0, agg.unsettled);
        }
    }
    report
}
