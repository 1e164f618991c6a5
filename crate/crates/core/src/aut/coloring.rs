use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("labels must start at 1; found 0 at vertex {0}")]
    ZeroLabel(usize),
    #[error("labels must form a contiguous range 1..=d; label {0} is unused")]
    Gap(u32),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    Length { got: usize, expected: usize },
}

/// A total vertex labeling with labels `1..=d`, every label used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    labels: Vec<u32>,
    d: u32,
}

impl Coloring {
    pub fn new(labels: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(ColoringError::ZeroLabel(v));
        }
        let d = labels.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; d as usize + 1];
        for &l in &labels {
            used[l as usize] = true;
        }
        if let Some(l) = (1..=d).find(|&l| !used[l as usize]) {
            return Err(ColoringError::Gap(l));
        }
        Ok(Coloring { labels, d })
    }

    /// The single-class coloring of `n` vertices.
    pub fn uniform(n: usize) -> Self {
        Coloring {
            labels: vec![1; n],
            d: u32::from(n > 0),
        }
    }

    /// Relabels arbitrary colour values to `1..=d`, preserving their order.
    pub fn from_raw(raw: &[u64]) -> Self {
        let ranks: BTreeMap<u64, u32> = raw
            .iter()
            .copied()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .zip(1..)
            .collect();
        let labels: Vec<u32> = raw.iter().map(|c| ranks[c]).collect();
        Coloring {
            d: ranks.len() as u32,
            labels,
        }
    }

    /// Colours every vertex of `set` with its own fresh label and everything
    /// else with one shared label.
    pub fn individualizing(n: usize, set: &[usize]) -> Self {
        let mut raw = vec![0u64; n];
        for (i, &v) in set.iter().enumerate() {
            raw[v] = i as u64 + 1;
        }
        Coloring::from_raw(&raw)
    }

    pub fn check_len(&self, n: usize) -> Result<(), ColoringError> {
        if self.labels.len() != n {
            return Err(ColoringError::Length {
                got: self.labels.len(),
                expected: n,
            });
        }
        Ok(())
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn num_labels(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label classes `C_1, ..., C_d`, each in ascending vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.d as usize];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l as usize - 1].push(v);
        }
        out
    }

    /// Class sizes sorted ascending.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}
