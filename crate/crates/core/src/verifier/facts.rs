//! Lazily computed invariants of one corpus graph, shared by every check
//! that looks at it. Each entry is computed at most once, with its own
//! budget.

use std::sync::OnceLock;

use crate::budget::{Budget, BudgetExceeded};
use crate::corpus::CorpusItem;
use crate::invariants::{
    compute_report, distinguishing_number, minimum_determining_sets, InvariantReport, Selection,
    MIN_SETS_CAP,
};

type Cached<T> = OnceLock<Result<T, BudgetExceeded>>;

pub(crate) struct Facts<'a> {
    pub item: &'a CorpusItem,
    limit: u64,
    d: Cached<u32>,
    report: Cached<InvariantReport>,
    min_sets: Cached<(Vec<Vec<usize>>, bool)>,
    parts: Cached<(InvariantReport, InvariantReport)>,
}

fn get<T>(cell: &Cached<T>, limit: u64, f: impl FnOnce(&Budget) -> Result<T, BudgetExceeded>) -> Result<&T, BudgetExceeded> {
    cell.get_or_init(|| f(&Budget::new(limit))).as_ref().map_err(|e| *e)
}

impl<'a> Facts<'a> {
    pub fn new(item: &'a CorpusItem, limit: u64) -> Self {
        Facts {
            item,
            limit,
            d: OnceLock::new(),
            report: OnceLock::new(),
            min_sets: OnceLock::new(),
            parts: OnceLock::new(),
        }
    }

    pub fn budget(&self) -> Budget {
        Budget::new(self.limit)
    }

    pub fn n(&self) -> usize {
        self.item.graph.order()
    }

    pub fn d(&self) -> Result<u32, BudgetExceeded> {
        if let Some(Ok(r)) = self.report.get() {
            return Ok(r.d);
        }
        get(&self.d, self.limit, |b| Ok(distinguishing_number(&self.item.graph, b)?.0)).copied()
    }

    /// `D`, `ρ` and `Det` with witnesses.
    pub fn report(&self) -> Result<&InvariantReport, BudgetExceeded> {
        get(&self.report, self.limit, |b| compute_report(&self.item.graph, Selection::ALL, b))
    }

    pub fn rho(&self) -> Result<usize, BudgetExceeded> {
        Ok(self.report()?.rho.expect("full report"))
    }

    pub fn det(&self) -> Result<usize, BudgetExceeded> {
        Ok(self.report()?.det.expect("full report"))
    }

    /// Minimum determining sets, at most [`MIN_SETS_CAP`]; the flag says
    /// whether the list is complete.
    pub fn min_sets(&self) -> Result<&(Vec<Vec<usize>>, bool), BudgetExceeded> {
        get(&self.min_sets, self.limit, |b| {
            minimum_determining_sets(&self.item.graph, MIN_SETS_CAP, b)
        })
    }

    /// Reports for the two corona factors. Panics if the item is no corona.
    pub fn parts(&self) -> Result<&(InvariantReport, InvariantReport), BudgetExceeded> {
        let (g, h) = self.item.corona.as_ref().expect("corona item");
        get(&self.parts, self.limit, |b| {
            Ok((
                compute_report(g, Selection::ALL, b)?,
                compute_report(h, Selection::ALL, b)?,
            ))
        })
    }
}
