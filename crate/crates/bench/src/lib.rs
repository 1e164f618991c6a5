//! Benchmark fixtures.

use symlab::graph::FamilySpec;
use symlab::Graph;

/// Builds a family graph from its spec string, panicking on bad specs.
pub fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.build().map_err(Into::into))
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Graphs the benchmarks run on, small enough for a sample run per second.
pub const FIXTURES: &[&str] = &[
    "friendship:4",
    "friendship:6",
    "friendship:8",
    "hypercube:3",
    "hypercube:4",
    "corona:(path:3),(complete:2)",
    "complete_bipartite:3,3",
];
