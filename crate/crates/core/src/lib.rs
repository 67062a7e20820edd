//! Exact combinatorics for vertex-expansion conditions and graph factors.
//!
//! The crate computes k-th binding numbers (and the classical and bipartite
//! binding numbers) with minimizing witnesses, constructs k-factors and
//! families of disjoint matchings with certificates, produces Tutte barriers
//! proving non-existence, and ships an exhaustive verification harness that
//! checks a catalog of structural claims over all small labeled graphs.
//!
//! Every value is exact: ratios are rationals in lowest terms and all
//! comparisons are integer comparisons. No floating point is used anywhere.

pub mod binding;
pub mod error;
pub mod factors;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod properties;
pub mod vset;

mod blossom;
mod flow;

pub use error::Error;
pub use graph::Graph;
pub use vset::VertexSet;

/// Exact rational type used for all ratio-valued parameters.
pub type Rational = num_rational::Ratio<i64>;
