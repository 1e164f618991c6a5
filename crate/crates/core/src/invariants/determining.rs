//! Determining sets: vertex sets whose pointwise stabilizer is trivial.
//!
//! The minimum size is found by walking stabilizer chains: at each step only
//! one vertex per orbit of the current pointwise stabilizer needs to be
//! tried, since images of a determining set under an automorphism are
//! determining. A minimum set never contains a vertex fixed by the
//! stabilizer of the vertices before it, which bounds the lexicographic
//! enumeration used for witnesses.

use crate::aut::pointwise_stabilizer;
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

fn base_within(
    g: &Graph,
    set: &mut Vec<usize>,
    remaining: usize,
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    let stab = pointwise_stabilizer(g, set, budget)?;
    if stab.is_trivial() {
        return Ok(true);
    }
    if remaining == 0 {
        return Ok(false);
    }
    for orbit in stab.orbits().iter().filter(|o| o.len() > 1) {
        set.push(orbit[0]);
        let found = base_within(g, set, remaining - 1, budget)?;
        set.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Minimum size of a determining set.
pub(crate) fn minimum_size(g: &Graph, budget: &Budget) -> Result<usize, BudgetExceeded> {
    for size in 0..=g.order() {
        if base_within(g, &mut Vec::new(), size, budget)? {
            return Ok(size);
        }
    }
    unreachable!("the whole vertex set is determining")
}

/// Visits determining sets of exactly `size` vertices that contain no
/// redundant vertex, in lexicographic order. `visit` returns `false` to stop.
pub(crate) fn for_each_irredundant(
    g: &Graph,
    size: usize,
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<(), BudgetExceeded> {
    fn walk(
        g: &Graph,
        set: &mut Vec<usize>,
        start: usize,
        size: usize,
        budget: &Budget,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool, BudgetExceeded> {
        let stab = pointwise_stabilizer(g, set, budget)?;
        if stab.is_trivial() {
            return Ok(set.len() != size || visit(set));
        }
        if set.len() == size {
            return Ok(true);
        }
        let mut moved = vec![false; g.order()];
        for orbit in stab.orbits().iter().filter(|o| o.len() > 1) {
            for &v in orbit {
                moved[v] = true;
            }
        }
        for x in (start..g.order()).filter(|&x| moved[x]) {
            set.push(x);
            let go_on = walk(g, set, x + 1, size, budget, visit)?;
            set.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
    walk(g, &mut Vec::new(), 0, size, budget, visit).map(|_| ())
}

/// Lexicographically least determining set of the given (minimum) size.
pub(crate) fn lex_least(
    g: &Graph,
    size: usize,
    budget: &Budget,
) -> Result<Vec<usize>, BudgetExceeded> {
    let mut found = None;
    for_each_irredundant(g, size, budget, &mut |s| {
        found = Some(s.to_vec());
        false
    })?;
    Ok(found.expect("a determining set of minimum size exists"))
}
