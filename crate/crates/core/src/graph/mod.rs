//! Simple undirected graphs and the constructors used throughout the crate.
//!
//! Vertices are the indices `0..n`. Graphs are immutable once built; every
//! constructor validates its input and returns a fully-formed value.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub mod edgelist;
pub mod family;
pub mod graph6;

pub use family::{FamilyError, FamilySpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} outside 0..{n}")]
    SubsetOutOfRange { v: usize, n: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("invalid parameter for {family}: {reason}")]
    BadParameter { family: &'static str, reason: String },
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        Graph {
            n,
            neighbors,
            matrix,
            names: None,
        }
    }

    /// Attaches a vertex-name table. The table must have one entry per vertex.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "name table length must equal order");
        self.names = Some(names);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name_of(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|t| t[v].as_str())
    }

    /// Looks a vertex up by its name, if the graph carries a name table.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `subset`. Returns the subgraph together with the
    /// old-to-new index map; new indices follow the ascending order of the
    /// old ones.
    pub fn induced_subgraph(
        &self,
        subset: &[usize],
    ) -> Result<(Graph, BTreeMap<usize, usize>), GraphError> {
        if subset.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::SubsetOutOfRange { v, n: self.n });
        }
        let map: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let k = keep.len();
        let mut matrix = vec![false; k * k];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                matrix[i * k + j] = self.has_edge(a, b);
            }
        }
        let mut sub = Graph::from_matrix(k, matrix);
        if let Some(names) = &self.names {
            sub.names = Some(keep.iter().map(|&v| names[v].clone()).collect());
        }
        Ok((sub, map))
    }

    /// True if `perm` maps edges to edges and non-edges to non-edges.
    pub fn preserves_adjacency(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && self
                .edges()
                .all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.matrix == other.matrix
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn bad(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::BadParameter {
        family,
        reason: reason.into(),
    }
}

/// Complete graph `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad("complete", "n must be at least 1"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Complete bipartite graph `K_{a,b}`; the first part is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(bad("complete_bipartite", "both parts must be non-empty"));
    }
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(a + b, &edges)
}

/// Path `P_n` on `n >= 1` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad("path", "n must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle", "n must be at least 3"));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Star `K_{1,k}` with centre 0 and leaves `1..=k`, `k >= 1`.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(bad("star", "needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::from_edge_list(k + 1, &edges)
}

/// Hypercube `Q_k` on `2^k` vertices; vertices adjacent iff their indices
/// differ in exactly one bit.
pub fn hypercube(k: usize) -> Result<Graph, GraphError> {
    if k > 16 {
        return Err(bad("hypercube", "dimension above 16 is not supported"));
    }
    let n = 1usize << k;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..k).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Friendship graph `F_n`: `n >= 2` triangles sharing the centre `w`.
///
/// Layout: `w` is vertex 0 and `v_k` is vertex `k` for `k = 1..=2n`; the
/// pair `{v_{2q-1}, v_{2q}}` closes the `q`-th triangle.
pub fn friendship(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(bad("friendship", "needs at least two triangles"));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for k in 1..=2 * n {
        edges.push((0, k));
    }
    for q in 1..=n {
        edges.push((2 * q - 1, 2 * q));
    }
    let names = std::iter::once("w".to_string())
        .chain((1..=2 * n).map(|k| format!("v_{k}")))
        .collect();
    Ok(Graph::from_edge_list(2 * n + 1, &edges)?.with_names(names))
}

/// Corona product `G ∘ H`.
///
/// Layout: vertices `0..|G|` are the copy of `G`; copy `H_i` occupies
/// `|G| + i*|H| .. |G| + (i+1)*|H|` and every vertex of it is joined to `i`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let gn = g.order();
    let hn = h.order();
    let n = gn * (1 + hn);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..gn {
        let base = gn + i * hn;
        edges.extend(h.edges().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..hn).map(|a| (i, base + a)));
    }
    let graph = Graph::from_edge_list(n, &edges).expect("corona layout is in range");
    match (g.names(), h.names()) {
        (None, None) => graph,
        _ => {
            let gname = |v: usize| g.name_of(v).map_or_else(|| v.to_string(), str::to_string);
            let hname = |v: usize| h.name_of(v).map_or_else(|| v.to_string(), str::to_string);
            let names = (0..gn)
                .map(gname)
                .chain((0..gn).flat_map(|i| (0..hn).map(move |a| (i, a))).map(|(i, a)| {
                    format!("{}/{}", gname(i), hname(a))
                }))
                .collect();
            graph.with_names(names)
        }
    }
}
