//! Individualization–refinement search for colour-preserving automorphisms.
//!
//! The leftmost path of the search tree fixes a base `v_0, v_1, ...`; its
//! leaf `ζ` serves as the reference labeling. Working from the deepest level
//! up, for every vertex `w` of the target cell at level `i` not yet known to
//! share an orbit with `v_i`, the subtree rooted at "individualize `w`" is
//! searched for a leaf `λ` such that `ζ -> λ` is an automorphism. The orbit
//! of `v_i` in the stabilizer of `v_0..v_{i-1}` is then exact, and the group
//! order is the product of these orbit sizes.

use num_bigint::BigUint;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::Graph;

use super::coloring::Coloring;
use super::perm::{Perm, PermGroup, UnionFind};
use super::refine::{count_cells, individualize, refine_colors};

struct PathNode {
    colors: Vec<u32>,
    target: Vec<usize>,
}

pub(crate) struct Search<'a> {
    g: &'a Graph,
    initial: &'a [u32],
    budget: &'a Budget,
    path: Vec<PathNode>,
    /// Cell sizes of the leftmost-path node at each depth.
    shapes: Vec<Vec<u32>>,
    /// Leaf of the leftmost path: `zeta[k]` is the vertex in cell `k`.
    zeta: Vec<usize>,
}

pub(crate) enum Outcome {
    Complete { generators: Vec<Perm>, order: BigUint },
    /// The stop predicate accepted an automorphism.
    Stopped,
}

fn shape(colors: &[u32]) -> Vec<u32> {
    let mut sizes = vec![0u32; count_cells(colors)];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes
}

/// First smallest non-singleton cell, vertices in index order.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let sizes = shape(colors);
    let best = sizes
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(i, &s)| (s, *i))?
        .0 as u32;
    Some(
        colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == best)
            .map(|(v, _)| v)
            .collect(),
    )
}

fn leaf_order(colors: &[u32]) -> Vec<usize> {
    let mut order = vec![0; colors.len()];
    for (v, &c) in colors.iter().enumerate() {
        order[c as usize] = v;
    }
    order
}

impl<'a> Search<'a> {
    /// `initial` must be dense colours `0..k`.
    pub(crate) fn new(
        g: &'a Graph,
        initial: &'a [u32],
        budget: &'a Budget,
    ) -> Result<Self, BudgetExceeded> {
        assert_eq!(initial.len(), g.order(), "colouring length must equal order");
        budget.tick()?;
        let mut colors = initial.to_vec();
        refine_colors(g, &mut colors);
        let mut path = Vec::new();
        let mut shapes = vec![shape(&colors)];
        while let Some(target) = target_cell(&colors) {
            budget.tick()?;
            let mut next = individualize(&colors, target[0]);
            refine_colors(g, &mut next);
            shapes.push(shape(&next));
            path.push(PathNode { colors, target });
            colors = next;
        }
        Ok(Search {
            g,
            initial,
            budget,
            path,
            shapes,
            zeta: leaf_order(&colors),
        })
    }

    pub(crate) fn run(
        &self,
        mut stop: impl FnMut(&Perm) -> bool,
    ) -> Result<Outcome, BudgetExceeded> {
        let n = self.g.order();
        let mut generators: Vec<Perm> = Vec::new();
        let mut order = BigUint::from(1u32);
        for level in (0..self.path.len()).rev() {
            let node = &self.path[level];
            let v = node.target[0];
            let mut uf = UnionFind::new(n);
            for gen in &generators {
                uf.absorb(gen);
            }
            for &w in &node.target[1..] {
                if uf.find(w) == uf.find(v) {
                    continue;
                }
                let mut child = individualize(&node.colors, w);
                if let Some(found) = self.descend(&mut child, level + 1, level, w)? {
                    if stop(&found) {
                        return Ok(Outcome::Stopped);
                    }
                    uf.absorb(&found);
                    generators.push(found);
                }
            }
            let root = uf.find(v);
            let orbit = node.target.iter().filter(|&&x| uf.find(x) == root).count();
            order *= BigUint::from(orbit);
        }
        Ok(Outcome::Complete { generators, order })
    }

    /// Depth-first search below a node whose colours are `colors` (not yet
    /// refined) at `depth`, for a leaf `λ` such that `ζ -> λ` is an
    /// automorphism fixing the base before `level` and sending its
    /// `level`-th point to `w`.
    fn descend(
        &self,
        colors: &mut [u32],
        depth: usize,
        level: usize,
        w: usize,
    ) -> Result<Option<Perm>, BudgetExceeded> {
        self.budget.tick()?;
        refine_colors(self.g, colors);
        if depth >= self.shapes.len() || shape(colors) != self.shapes[depth] {
            return Ok(None);
        }
        match target_cell(colors) {
            None => Ok(self
                .leaf_automorphism(colors)
                .filter(|p| self.respects_base(p, level, w))),
            Some(target) => {
                for u in target {
                    let mut child = individualize(colors, u);
                    if let Some(found) = self.descend(&mut child, depth + 1, level, w)? {
                        return Ok(Some(found));
                    }
                }
                Ok(None)
            }
        }
    }

    fn respects_base(&self, p: &Perm, level: usize, w: usize) -> bool {
        self.path[..level]
            .iter()
            .all(|node| p.apply(node.target[0]) == node.target[0])
            && p.apply(self.path[level].target[0]) == w
    }

    fn leaf_automorphism(&self, colors: &[u32]) -> Option<Perm> {
        let lambda = leaf_order(colors);
        let mut images = vec![0; lambda.len()];
        for (k, &z) in self.zeta.iter().enumerate() {
            images[z] = lambda[k];
        }
        let colors_kept = (0..images.len()).all(|v| self.initial[images[v]] == self.initial[v]);
        (colors_kept && self.g.preserves_adjacency(&images))
            .then(|| Perm::from_images(images).expect("leaf orders are bijections"))
    }
}

pub(crate) fn dense_colors(coloring: &Coloring) -> Vec<u32> {
    coloring.labels().iter().map(|&l| l - 1).collect()
}

/// Full colour-preserving automorphism group from dense colours.
pub(crate) fn group_of(
    g: &Graph,
    colors: &[u32],
    budget: &Budget,
) -> Result<PermGroup, BudgetExceeded> {
    let search = Search::new(g, colors, budget)?;
    match search.run(|_| false)? {
        Outcome::Complete { generators, order } => Ok(PermGroup::new(g.order(), generators, order)),
        Outcome::Stopped => unreachable!("stop predicate never fires"),
    }
}

/// True iff no colour-preserving automorphism moves any vertex in `targets`.
pub(crate) fn fixes_all(
    g: &Graph,
    colors: &[u32],
    targets: &[bool],
    budget: &Budget,
) -> Result<bool, BudgetExceeded> {
    let search = Search::new(g, colors, budget)?;
    let moved = |p: &Perm| (0..p.degree()).any(|v| targets[v] && p.apply(v) != v);
    Ok(matches!(search.run(moved)?, Outcome::Complete { .. }))
}
