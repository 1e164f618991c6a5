//! Colour-preserving automorphism groups.
//!
//! Every invariant in this crate reduces to questions of the form "which
//! permutations preserve both the adjacency of `G` and a vertex colouring?".
//! The all-ones colouring yields the plain automorphism group.

mod coloring;
mod perm;
mod refine;
pub(crate) mod search;

pub use coloring::{Coloring, ColoringError};
pub use perm::{orbits_of, Perm, PermGroup, TooLarge};
pub use refine::refine;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

/// The group of automorphisms of `g` that preserve every label of `coloring`.
pub fn automorphisms(
    g: &Graph,
    coloring: &Coloring,
    budget: &Budget,
) -> Result<PermGroup, BudgetExceeded> {
    search::group_of(g, &search::dense_colors(coloring), budget)
}

/// True iff the only label-preserving automorphism is the identity.
pub fn is_color_rigid(
    g: &Graph,
    coloring: &Coloring,
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    let all = vec![true; g.order()];
    search::fixes_all(g, &search::dense_colors(coloring), &all, budget)
}

/// True iff the only automorphism fixing every vertex of `set` is the
/// identity.
pub fn pointwise_stabilizer_is_trivial(
    g: &Graph,
    set: &[usize],
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    is_color_rigid(g, &Coloring::individualizing(g.order(), set), budget)
}

/// Pointwise stabilizer of `set` in `Aut(g)`.
pub fn pointwise_stabilizer(
    g: &Graph,
    set: &[usize],
    budget: &Budget,
) -> Result<PermGroup, BudgetExceeded> {
    automorphisms(g, &Coloring::individualizing(g.order(), set), budget)
}

/// True if `perm` preserves adjacency and every label of `coloring`.
pub fn is_automorphism(g: &Graph, coloring: &Coloring, perm: &Perm) -> bool {
    perm.degree() == g.order()
        && g.preserves_adjacency(perm.images())
        && (0..g.order()).all(|v| coloring.label(perm.apply(v)) == coloring.label(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, friendship, path, Graph};
    use itertools::Itertools;
    use num_bigint::BigUint;

    fn brute_force(g: &Graph, c: &Coloring) -> Vec<Perm> {
        let n = g.order();
        let mut out: Vec<Perm> = (0..n)
            .permutations(n)
            .map(|p| Perm::from_images(p).unwrap())
            .filter(|p| is_automorphism(g, c, p))
            .collect();
        out.sort();
        out
    }

    fn order(g: &Graph, labels: &[u32]) -> BigUint {
        let c = Coloring::new(labels.to_vec()).unwrap();
        automorphisms(g, &c, &Budget::default()).unwrap().order().clone()
    }

    #[test]
    fn friendship_two_has_eight() {
        let f2 = friendship(2).unwrap();
        let c = Coloring::uniform(5);
        assert_eq!(brute_force(&f2, &c).len(), 8);
        let group = automorphisms(&f2, &c, &Budget::default()).unwrap();
        assert_eq!(*group.order(), BigUint::from(8u32));
        assert_eq!(group.enumerate_elements(100).unwrap(), brute_force(&f2, &c));
    }

    #[test]
    fn complete_graphs() {
        let mut fact = BigUint::from(1u32);
        for n in 1..=12u32 {
            fact *= n;
            assert_eq!(order(&complete(n as usize).unwrap(), &vec![1; n as usize]), fact);
        }
        let k3 = complete(3).unwrap();
        let group = automorphisms(&k3, &Coloring::uniform(3), &Budget::default()).unwrap();
        assert_eq!(group.enumerate_elements(10).unwrap().len(), 6);
    }

    #[test]
    fn coloured_path() {
        let p3 = path(3).unwrap();
        assert_eq!(order(&p3, &[1, 2, 1]), BigUint::from(2u32));
        assert_eq!(order(&p3, &[1, 1, 2]), BigUint::from(1u32));
        let group = automorphisms(&p3, &Coloring::uniform(3), &Budget::default()).unwrap();
        assert_eq!(orbits_of(&group), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn rigidity() {
        let b = Budget::default();
        let p3 = path(3).unwrap();
        assert!(is_color_rigid(&p3, &Coloring::new(vec![1, 1, 2]).unwrap(), &b).unwrap());
        let k3 = complete(3).unwrap();
        assert!(is_color_rigid(&k3, &Coloring::new(vec![1, 2, 3]).unwrap(), &b).unwrap());
        let c4 = cycle(4).unwrap();
        assert!(!is_color_rigid(&c4, &Coloring::uniform(4), &b).unwrap());
    }

    #[test]
    fn stabilizers_in_friendship() {
        let b = Budget::default();
        let f2 = friendship(2).unwrap();
        assert!(pointwise_stabilizer_is_trivial(&f2, &[1, 3], &b).unwrap());
        assert!(!pointwise_stabilizer_is_trivial(&f2, &[1], &b).unwrap());
        let all: Vec<usize> = (0..5).collect();
        assert!(pointwise_stabilizer_is_trivial(&f2, &all, &b).unwrap());
    }

    #[test]
    fn budget_is_an_error_not_an_answer() {
        let k8 = complete(8).unwrap();
        let tiny = Budget::new(3);
        assert!(automorphisms(&k8, &Coloring::uniform(8), &tiny).is_err());
        assert!(is_color_rigid(&k8, &Coloring::uniform(8), &Budget::new(3)).is_err());
    }

    #[test]
    fn generators_verify_and_are_deterministic() {
        let g = friendship(4).unwrap();
        let c = Coloring::uniform(9);
        let a = automorphisms(&g, &c, &Budget::default()).unwrap();
        let b = automorphisms(&g, &c, &Budget::default()).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert!(a.generators().iter().all(|p| is_automorphism(&g, &c, p)));
        // 2^4 * 4!
        assert_eq!(*a.order(), BigUint::from(384u32));
    }
}
