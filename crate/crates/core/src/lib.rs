//! Symmetry-breaking invariants of finite graphs.

pub mod aut;
pub mod budget;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod verifier;

pub use aut::{Coloring, Perm, PermGroup};
pub use budget::{Budget, BudgetExceeded};
pub use graph::Graph;
pub use invariants::{InvariantReport, Selection};
