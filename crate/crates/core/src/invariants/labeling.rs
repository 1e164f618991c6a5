//! Backtracking search for labelings that break all symmetry on a target
//! vertex set.
//!
//! A subset of the vertices ("positions") receives labels `0..free`; every
//! other vertex keeps a fixed base colour distinct from those labels. A
//! labeling succeeds when no colour-preserving automorphism moves a target
//! vertex. Three prunes keep the search small:
//!
//! * value symmetry: labels appear in order of first use;
//! * lex-leader: a prefix is dropped if some known symmetry `σ` of the
//!   problem makes `σ·L` lexicographically smaller within the prefix;
//! * completion bound: unlabeled positions are given pairwise distinct
//!   fresh colours, which is the finest possible completion. If a target
//!   already moves under that colouring, it moves under every completion.

use crate::aut::search::{fixes_all, group_of};
use crate::aut::Perm;
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

/// Groups up to this order are fully enumerated for lex-leader pruning;
/// larger groups contribute their generators and inverses only.
const ENUMERATION_CAP: usize = 720;

const BASE_OFFSET: u64 = 1 << 32;
const FRESH_OFFSET: u64 = 1 << 48;

pub(crate) fn dense(raw: &[u64]) -> Vec<u32> {
    let mut present = raw.to_vec();
    present.sort_unstable();
    present.dedup();
    raw.iter()
        .map(|c| present.binary_search(c).unwrap() as u32)
        .collect()
}

pub(crate) struct LabelingProblem<'a> {
    pub g: &'a Graph,
    pub positions: Vec<usize>,
    /// Base colour of every non-position vertex (entries at positions are
    /// ignored).
    pub base: Vec<u64>,
    pub free: u32,
    pub targets: Vec<bool>,
}

struct Searcher<'a, 'b> {
    problem: &'b LabelingProblem<'a>,
    budget: &'b Budget,
    pos_index: Vec<Option<usize>>,
    /// Inverses of the symmetries used for lex-leader pruning.
    inverses: Vec<Perm>,
    labels: Vec<u32>,
}

impl LabelingProblem<'_> {
    fn raw_base(&self) -> Vec<u64> {
        let mut raw: Vec<u64> = self.base.iter().map(|&b| BASE_OFFSET + b).collect();
        for &p in &self.positions {
            raw[p] = 0;
        }
        raw
    }

    /// Finds a labeling of the positions (labels `0..free`) under which no
    /// target vertex is moved, or proves none exists.
    pub(crate) fn solve(&self, budget: &Budget) -> Result<Option<Vec<u32>>, BudgetExceeded> {
        let n = self.g.order();
        let mut pos_index = vec![None; n];
        for (i, &p) in self.positions.iter().enumerate() {
            pos_index[p] = Some(i);
        }
        let group = group_of(self.g, &dense(&self.raw_base()), budget)?;
        let inverses = match group.enumerate_elements(ENUMERATION_CAP) {
            Ok(all) => all.into_iter().filter(|p| !p.is_identity()).collect(),
            Err(_) => group
                .generators()
                .iter()
                .flat_map(|g| [g.inverse(), g.clone()])
                .collect(),
        };
        let mut s = Searcher {
            problem: self,
            budget,
            pos_index,
            inverses,
            labels: Vec::with_capacity(self.positions.len()),
        };
        if self.positions.is_empty() {
            return Ok(s.completion_ok()?.then(Vec::new));
        }
        if s.dfs(0)? {
            Ok(Some(s.labels))
        } else {
            Ok(None)
        }
    }
}

impl Searcher<'_, '_> {
    fn dfs(&mut self, max_used: u32) -> Result<bool, BudgetExceeded> {
        let depth = self.labels.len();
        let top = (max_used + 1).min(self.problem.free);
        for label in 0..top {
            self.budget.tick()?;
            self.labels.push(label);
            if !self.lex_violation() && self.completion_ok()? {
                if depth + 1 == self.problem.positions.len() {
                    return Ok(true);
                }
                if self.dfs(max_used.max(label + 1))? {
                    return Ok(true);
                }
            }
            self.labels.pop();
        }
        Ok(false)
    }

    fn lex_violation(&self) -> bool {
        let assigned = self.labels.len();
        let positions = &self.problem.positions;
        'perm: for inv in &self.inverses {
            for (j, &p) in positions.iter().take(assigned).enumerate() {
                let q = self.pos_index[inv.apply(p)].expect("symmetries preserve positions");
                if q >= assigned {
                    continue 'perm;
                }
                match self.labels[q].cmp(&self.labels[j]) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => continue 'perm,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        false
    }

    fn completion_ok(&self) -> Result<bool, BudgetExceeded> {
        let p = self.problem;
        let mut raw = p.raw_base();
        for (i, &v) in p.positions.iter().enumerate() {
            raw[v] = match self.labels.get(i) {
                Some(&l) => u64::from(l),
                None => FRESH_OFFSET + i as u64,
            };
        }
        fixes_all(p.g, &dense(&raw), &p.targets, self.budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{friendship, path};

    fn whole_graph(g: &Graph, free: u32) -> LabelingProblem<'_> {
        let n = g.order();
        LabelingProblem {
            g,
            positions: (0..n).collect(),
            base: vec![0; n],
            free,
            targets: vec![true; n],
        }
    }

    #[test]
    fn path_needs_two_labels() {
        let p4 = path(4).unwrap();
        let b = Budget::default();
        assert!(whole_graph(&p4, 1).solve(&b).unwrap().is_none());
        let labels = whole_graph(&p4, 2).solve(&b).unwrap().unwrap();
        assert_eq!(labels, vec![0, 0, 0, 1]);
    }

    #[test]
    fn friendship_needs_three() {
        let f3 = friendship(3).unwrap();
        let b = Budget::default();
        assert!(whole_graph(&f3, 2).solve(&b).unwrap().is_none());
        assert!(whole_graph(&f3, 3).solve(&b).unwrap().is_some());
    }
}
