//! Distinguishing number `D(G)`, cost `ρ_d(G)` and determining number
//! `Det(G)`, each returned with a witness that can be re-checked through the
//! automorphism engine.

mod determining;
mod labeling;
mod report;

use itertools::Itertools;

use crate::aut::search::{fixes_all, group_of};
use crate::aut::{automorphisms, pointwise_stabilizer, pointwise_stabilizer_is_trivial, Coloring};
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

use labeling::{dense, LabelingProblem};

pub use report::{compute_report, InvariantReport, Selection};

/// Cap on the number of minimum determining sets returned by
/// [`minimum_determining_sets`].
pub const MIN_SETS_CAP: usize = 1000;

/// `D(G)` with a `D(G)`-distinguishing witness.
pub fn distinguishing_number(
    g: &Graph,
    budget: &Budget,
) -> Result<(u32, Coloring), BudgetExceeded> {
    let n = g.order();
    if automorphisms(g, &Coloring::uniform(n), budget)?.is_trivial() {
        return Ok((1, Coloring::uniform(n)));
    }
    for d in 2..=n as u32 {
        let problem = LabelingProblem {
            g,
            positions: (0..n).collect(),
            base: vec![0; n],
            free: d,
            targets: vec![true; n],
        };
        if let Some(labels) = problem.solve(budget)? {
            let coloring = Coloring::new(labels.into_iter().map(|l| l + 1).collect())
                .expect("minimal d uses every label");
            return Ok((d, coloring));
        }
    }
    unreachable!("n distinct labels always distinguish")
}

/// Orbit representatives of `k`-subsets (`k <= 3`): one tuple per orbit of
/// ordered tuples, built along stabilizer chains, then deduplicated as sets.
/// Every orbit of `k`-subsets is hit at least once.
fn subset_orbit_representatives(
    g: &Graph,
    k: usize,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    fn extend(
        g: &Graph,
        prefix: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<(), BudgetExceeded> {
        if prefix.len() == k {
            let mut s = prefix.clone();
            s.sort_unstable();
            out.push(s);
            return Ok(());
        }
        let stab = pointwise_stabilizer(g, prefix, budget)?;
        for rep in stab.orbit_representatives() {
            if !prefix.contains(&rep) {
                prefix.push(rep);
                extend(g, prefix, k, out, budget)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), k, &mut out, budget)?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Candidate label classes of size `k`, pruned by symmetry for `k <= 3`.
fn candidate_classes(
    g: &Graph,
    k: usize,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    if k <= 3 {
        subset_orbit_representatives(g, k, budget)
    } else {
        Ok((0..g.order()).combinations(k).collect())
    }
}

/// Cost `ρ_d(G)` for `d = D(G)`, with a witness labeling whose label-1 class
/// has the minimum size.
pub fn cost(g: &Graph, budget: &Budget) -> Result<(usize, Coloring), BudgetExceeded> {
    let (d, _) = distinguishing_number(g, budget)?;
    cost_with(g, d, budget)
}

/// Cost for a known `d = D(G)`.
pub fn cost_with(
    g: &Graph,
    d: u32,
    budget: &Budget,
) -> Result<(usize, Coloring), BudgetExceeded> {
    let n = g.order();
    if d == 1 {
        return Ok((n, Coloring::uniform(n)));
    }
    for k in 1..n {
        for class in candidate_classes(g, k, budget)? {
            let mut in_class = vec![false; n];
            for &v in &class {
                in_class[v] = true;
            }
            let problem = LabelingProblem {
                g,
                positions: (0..n).filter(|&v| !in_class[v]).collect(),
                base: vec![0; n],
                free: d - 1,
                targets: vec![true; n],
            };
            if let Some(labels) = problem.solve(budget)? {
                let mut full = vec![1u32; n];
                for (&v, l) in problem.positions.iter().zip(labels) {
                    full[v] = l + 2;
                }
                let coloring = Coloring::new(full).expect("minimal d uses every label");
                return Ok((k, coloring));
            }
        }
    }
    unreachable!("a d-distinguishing labeling has a class of size below n")
}

/// `Det(G)` with the lexicographically least minimum determining set.
pub fn determining_number(
    g: &Graph,
    budget: &Budget,
) -> Result<(usize, Vec<usize>), BudgetExceeded> {
    let size = determining::minimum_size(g, budget)?;
    let witness = determining::lex_least(g, size, budget)?;
    Ok((size, witness))
}

/// All minimum determining sets in lexicographic order, truncated to
/// `cap`. The boolean is `true` when the list is complete.
pub fn minimum_determining_sets(
    g: &Graph,
    cap: usize,
    budget: &Budget,
) -> Result<(Vec<Vec<usize>>, bool), BudgetExceeded> {
    let size = determining::minimum_size(g, budget)?;
    let mut sets = Vec::new();
    let mut complete = true;
    determining::for_each_irredundant(g, size, budget, &mut |s| {
        if sets.len() == cap {
            complete = false;
            return false;
        }
        sets.push(s.to_vec());
        true
    })?;
    Ok((sets, complete))
}

/// True iff any two automorphisms agreeing on `set` are equal.
pub fn is_determining_set(
    g: &Graph,
    set: &[usize],
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    pointwise_stabilizer_is_trivial(g, set, budget)
}

fn subset_coloring(n: usize, subset: &[usize], labels: &[u32]) -> Vec<u32> {
    let d = labels.iter().copied().max().unwrap_or(0);
    let mut raw = vec![u64::from(d) + 1; n];
    for (&v, &l) in subset.iter().zip(labels) {
        raw[v] = u64::from(l);
    }
    dense(&raw)
}

/// True iff every automorphism that fixes `subset` setwise and preserves the
/// label classes of `labels` (given per element of `subset`) fixes `subset`
/// pointwise.
pub fn subset_is_d_distinguishable(
    g: &Graph,
    subset: &[usize],
    labels: &[u32],
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    assert_eq!(subset.len(), labels.len(), "one label per subset vertex");
    let n = g.order();
    let mut targets = vec![false; n];
    for &v in subset {
        targets[v] = true;
    }
    fixes_all(g, &subset_coloring(n, subset, labels), &targets, budget)
}

/// Least `d` for which some labeling of `subset` with labels `1..=d` makes
/// it `d`-distinguishable, with that labeling. The empty set gives `1`.
pub fn subset_distinguishing_number(
    g: &Graph,
    subset: &[usize],
    budget: &Budget,
) -> Result<(u32, Vec<u32>), BudgetExceeded> {
    let n = g.order();
    if subset.is_empty() {
        return Ok((1, Vec::new()));
    }
    let mut targets = vec![false; n];
    for &v in subset {
        targets[v] = true;
    }
    for d in 1..=subset.len() as u32 {
        let problem = LabelingProblem {
            g,
            positions: subset.to_vec(),
            base: vec![0; n],
            free: d,
            targets: targets.clone(),
        };
        if let Some(labels) = problem.solve(budget)? {
            return Ok((d, labels.into_iter().map(|l| l + 1).collect()));
        }
    }
    unreachable!("distinct labels on the subset always suffice")
}

/// Colour-preserving group order helper used by reports.
pub(crate) fn group_order(g: &Graph, budget: &Budget) -> Result<num_bigint::BigUint, BudgetExceeded> {
    let colors = vec![0; g.order()];
    Ok(group_of(g, &colors, budget)?.order().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::is_color_rigid;
    use crate::graph::{complete, cycle, friendship, path};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn distinguishing_examples() {
        for n in 3..9 {
            let (d, w) = distinguishing_number(&path(n).unwrap(), &b()).unwrap();
            assert_eq!(d, 2);
            assert!(is_color_rigid(&path(n).unwrap(), &w, &b()).unwrap());
        }
        assert_eq!(distinguishing_number(&friendship(2).unwrap(), &b()).unwrap().0, 3);
        assert_eq!(distinguishing_number(&complete(1).unwrap(), &b()).unwrap().0, 1);
        assert_eq!(distinguishing_number(&complete(5).unwrap(), &b()).unwrap().0, 5);
    }

    #[test]
    fn cost_examples() {
        for n in 3..9 {
            assert_eq!(cost(&path(n).unwrap(), &b()).unwrap().0, 1);
        }
        for n in 2..7 {
            assert_eq!(cost(&complete(n).unwrap(), &b()).unwrap().0, 1);
        }
        let (rho, w) = cost(&friendship(3).unwrap(), &b()).unwrap();
        assert_eq!(rho, 2);
        assert_eq!(w.num_labels(), 3);
        assert_eq!(w.class_sizes()[0], 2);
        // d = 1 convention: the single class is V
        assert_eq!(cost(&complete(1).unwrap(), &b()).unwrap().0, 1);
    }

    #[test]
    fn determining_examples() {
        for n in 2..7 {
            let f = friendship(n).unwrap();
            let (det, set) = determining_number(&f, &b()).unwrap();
            assert_eq!(det, n);
            let expected: Vec<usize> = (0..n).map(|q| 2 * q + 1).collect();
            assert_eq!(set, expected);
        }
        for n in 1..7 {
            assert_eq!(determining_number(&complete(n).unwrap(), &b()).unwrap().0, n - 1);
        }
    }

    #[test]
    fn determining_set_queries() {
        let f3 = friendship(3).unwrap();
        assert!(is_determining_set(&f3, &[1, 3, 5], &b()).unwrap());
        assert!(!is_determining_set(&f3, &[1, 3], &b()).unwrap());
        // spider with legs of length 1, 2 and 3 at vertex 2 is asymmetric
        let rigid = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        assert!(is_determining_set(&rigid, &[], &b()).unwrap());
    }

    #[test]
    fn subset_distinguishability() {
        let p3 = path(3).unwrap();
        assert!(subset_is_d_distinguishable(&p3, &[0], &[1], &b()).unwrap());
        let c4 = cycle(4).unwrap();
        assert!(!subset_is_d_distinguishable(&c4, &[0, 2], &[1, 1], &b()).unwrap());
        let all: Vec<usize> = (0..4).collect();
        let labels = [1, 2, 2, 2];
        assert_eq!(
            subset_is_d_distinguishable(&c4, &all, &labels, &b()).unwrap(),
            is_color_rigid(&c4, &Coloring::new(labels.to_vec()).unwrap(), &b()).unwrap()
        );
    }

    #[test]
    fn subset_distinguishing_numbers() {
        let f2 = friendship(2).unwrap();
        assert_eq!(subset_distinguishing_number(&f2, &[], &b()).unwrap().0, 1);
        assert_eq!(subset_distinguishing_number(&f2, &[1, 3], &b()).unwrap().0, 2);
        let k3 = complete(3).unwrap();
        assert_eq!(subset_distinguishing_number(&k3, &[0, 2], &b()).unwrap().0, 2);
    }

    #[test]
    fn minimum_sets_enumeration() {
        let f2 = friendship(2).unwrap();
        let (sets, complete) = minimum_determining_sets(&f2, MIN_SETS_CAP, &b()).unwrap();
        assert!(complete);
        // one vertex from each triangle pair
        assert_eq!(sets, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        let (sets, complete) = minimum_determining_sets(&f2, 2, &b()).unwrap();
        assert_eq!(sets.len(), 2);
        assert!(!complete);
    }
}
