//! Total transversals and total domination in uniform hypergraphs: exact
//! solvers, polynomial-time constructions, and the search harness used to
//! probe `b_k = sup τ_t/(n+m)`.
//!
//! Bound formulas are generic over [`Scalar`]; [`Rational`] is the exact
//! default and `f32`/`f64` are accepted for screening.

pub mod bitset;
pub mod construct;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod scalar;
pub mod search;
pub mod solve;
pub mod transform;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{ClassCheck, DegreeProfile, Hypergraph};
pub use scalar::{Rational, Scalar};
pub use solve::{Invariant, SolveResult};

/// Theorem report with exact rational arithmetic.
pub type ExactBoundReport = search::BoundReport<Rational>;
/// Theorem report in double precision.
pub type FloatBoundReport = search::BoundReport<f64>;
/// Monte-Carlo report in double precision.
pub type TrialReport64 = construct::TrialReport<f64>;
