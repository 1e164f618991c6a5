use std::cell::Cell;

use thiserror::Error;

/// Default cap on search-tree nodes for one computation.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// Node counter shared by every search performed for one computation.
///
/// Exhausting it aborts the computation with [`BudgetExceeded`]; it never
/// turns into a yes/no answer. Not `Sync`: each worker owns its budget.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&self) -> Result<(), BudgetExceeded> {
        let used = self.used.get() + 1;
        if used > self.limit {
            return Err(BudgetExceeded { limit: self.limit });
        }
        self.used.set(used);
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhausts_exactly_at_limit() {
        let b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(BudgetExceeded { limit: 2 }));
        assert_eq!(b.used(), 2);
    }
}
