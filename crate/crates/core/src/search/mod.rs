//! Enumeration, random generation, theorem checks and the `b_k` search.

pub mod bk;
pub mod bounds;
pub mod enumerate;
pub mod generate;
pub mod sweep;

pub use bk::{estimate_bk, BkEstimate, SearchConfig, SearchMode};
pub use bounds::{
    b_value, instance_id, theta, verify_all, verify_bounds, BoundReport, BoundRow, Provenance, Skipped,
    SolvedValues, TheoremId, TheoremSelection,
};
pub use enumerate::{binomial, canonical_form, enumerate_hk, is_isomorphic, OrderEnumerator};
pub use generate::{random_graph, random_hypergraph, random_linear_two_regular, random_regular_graph};
pub use sweep::{asymptotic_sweep, choose_c, upper_coefficient, CChoice, SweepConfig, SweepRow};
