//! Brute-force oracles over all n! permutations. Independent of the search
//! engine: they only use adjacency queries on `Graph`.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::Rng;
use symlab::Graph;

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(usize, usize)> = pairs.zip(mask).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p = rng.random_range(0.2..0.8);
    let mask: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.random_bool(p)).collect();
    graph_from_mask(n, &mask)
}

/// Every colour-preserving automorphism as an image vector.
pub fn automorphisms(g: &Graph, colors: &[u64]) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|v| colors[p[v]] == colors[v]))
        .filter(|p| {
            (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v])))
        })
        .collect()
}

pub fn plain_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    automorphisms(g, &vec![0; g.order()]).into_iter().collect()
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// True iff no non-identity element of `auts` preserves `labels`.
pub fn rigid_under(auts: &[Vec<usize>], labels: &[u32]) -> bool {
    auts.iter()
        .filter(|p| !is_identity(p))
        .all(|p| (0..labels.len()).any(|v| labels[p[v]] != labels[v]))
}

/// All labelings of `n >= 1` positions with `1..=d`.
fn labelings(n: usize, d: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..n).map(|_| 1..=d).multi_cartesian_product()
}

pub fn distinguishing_number(g: &Graph) -> u32 {
    let auts = plain_automorphisms(g);
    (1..)
        .find(|&d| labelings(g.order(), d).any(|l| rigid_under(&auts, &l)))
        .unwrap()
}

/// Least class size over distinguishing labelings using exactly `d` labels.
pub fn cost(g: &Graph, d: u32) -> usize {
    let auts = plain_automorphisms(g);
    labelings(g.order(), d)
        .filter(|l| rigid_under(&auts, l))
        .filter_map(|l| {
            let sizes: Vec<usize> = (1..=d).map(|c| l.iter().filter(|&&x| x == c).count()).collect();
            sizes.iter().all(|&s| s > 0).then(|| *sizes.iter().min().unwrap())
        })
        .min()
        .unwrap()
}

pub fn is_determining(auts: &[Vec<usize>], set: &[usize]) -> bool {
    auts.iter()
        .filter(|p| !is_identity(p))
        .all(|p| set.iter().any(|&v| p[v] != v))
}

/// All minimum determining sets in lexicographic order.
pub fn minimum_determining_sets(g: &Graph) -> Vec<Vec<usize>> {
    let auts = plain_automorphisms(g);
    let n = g.order();
    (0..=n)
        .map(|k| {
            (0..n)
                .combinations(k)
                .filter(|s| is_determining(&auts, s))
                .collect::<Vec<_>>()
        })
        .find(|sets| !sets.is_empty())
        .unwrap()
}

/// Least `d` such that some labeling of `subset` with `1..=d` makes every
/// automorphism that fixes it setwise and preserves the labels fix it
/// pointwise.
pub fn subset_distinguishing_number(g: &Graph, subset: &[usize]) -> u32 {
    if subset.is_empty() {
        return 1;
    }
    let auts = plain_automorphisms(g);
    let inside: BTreeSet<usize> = subset.iter().copied().collect();
    let setwise: Vec<&Vec<usize>> = auts
        .iter()
        .filter(|p| subset.iter().all(|v| inside.contains(&p[*v])))
        .collect();
    (1..)
        .find(|&d| {
            labelings(subset.len(), d).any(|l| {
                let label = |v: usize| l[subset.iter().position(|&x| x == v).unwrap()];
                setwise.iter().all(|p| {
                    subset.iter().all(|&v| p[v] == v) || subset.iter().any(|&v| label(p[v]) != label(v))
                })
            })
        })
        .unwrap()
}
