//! Graph operators and the dynamics of their iteration.
//!
//! A graph operator maps graphs to graphs (or to the empty result `∅`) and
//! respects isomorphism. Iterating one from a starting graph produces an
//! orbit that either reaches `∅`, grows without bound, or becomes
//! eventually periodic up to isomorphism. This crate provides:
//!
//! - [`graph`]: immutable bitset graphs;
//! - [`iso`]: exact canonical forms and isomorphism tests;
//! - [`generators`]: named families (paths, grids, generalized Petersen
//!   graphs, hats on cubic graphs);
//! - [`enumeration`]: induced paths, induced cycles, triangles, claws and
//!   clique edge partitions;
//! - [`operators`]: line, path, triangle, cycle, claw, complement,
//!   subdivision and shadow graphs;
//! - [`dynamics`]: orbit materialization with exact tail/period detection;
//! - [`theorems`]: closed-form classifications used as cross-checks;
//! - [`formats`]: graph6, edge-list and DOT text formats.

pub mod dynamics;
pub mod enumeration;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod operators;
pub mod theorems;

pub use dynamics::{classify, iterate, orbit_orders, Budget, BudgetReason, IterationTrace, Verdict};
pub use graph::{Graph, GraphError, MaybeGraph};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use operators::{apply, OperatorId};
pub use theorems::{cross_validate, OracleVerdict};
