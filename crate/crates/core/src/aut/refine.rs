//! Equitable colour refinement.
//!
//! Colours are dense cell indices `0..k`. Each round sorts vertices by
//! `(colour, sorted neighbour colours)` and renumbers; because the new
//! numbering depends only on these signatures, refinement commutes with
//! every colour-preserving automorphism.

use crate::graph::Graph;

use super::coloring::Coloring;

pub(crate) fn count_cells(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Refines `colors` in place until stable; returns the number of cells.
pub(crate) fn refine_colors(g: &Graph, colors: &mut [u32]) -> usize {
    let n = g.order();
    let mut cells = count_cells(colors);
    let mut keyed: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        if cells == n {
            return cells;
        }
        keyed.clear();
        for v in 0..n {
            let mut sig: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
            sig.sort_unstable();
            keyed.push((colors[v], sig, v));
        }
        keyed.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                rank += 1;
            }
            colors[keyed[i].2] = rank;
        }
        let next = rank as usize + 1;
        if next == cells {
            return cells;
        }
        cells = next;
    }
}

/// Splits `v` off its cell, placing the singleton `{v}` first.
pub(crate) fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let cv = colors[v];
    let mut raw: Vec<u32> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| 2 * c + u32::from(c == cv && u != v))
        .collect();
    densify(&mut raw);
    raw
}

pub(crate) fn densify(colors: &mut [u32]) {
    let mut present: Vec<u32> = colors.to_vec();
    present.sort_unstable();
    present.dedup();
    for c in colors.iter_mut() {
        *c = present.binary_search(c).unwrap() as u32;
    }
}

/// Equitable refinement of `coloring`. The result refines the input and is
/// preserved by every automorphism that preserves the input.
pub fn refine(g: &Graph, coloring: &Coloring) -> Coloring {
    let mut colors: Vec<u32> = coloring.labels().iter().map(|&l| l - 1).collect();
    refine_colors(g, &mut colors);
    Coloring::new(colors.into_iter().map(|c| c + 1).collect()).expect("dense after refinement")
}
