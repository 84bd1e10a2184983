//! Exact certification of k-factor-criticality in t-connected graphs.
//!
//! A graph is k-factor-critical when deleting any k vertices leaves a graph
//! with a perfect matching. Two sufficient conditions for this property in
//! t-connected graphs are checked here — one on the edge count, one on the
//! adjacency spectral radius — together with the extremal family
//! `K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1)` that is the unique exception to both.
//!
//! Everything is exact at desk scale: matching by the blossom algorithm,
//! connectivity by unit-capacity max-flow, clique/independence numbers by
//! branch and bound, edge thresholds in integer arithmetic. The spectral
//! radius is the one floating-point quantity, certified by an
//! eigen-equation residual and cross-checked against a quotient-matrix
//! value for the extremal family.
//!
//! The `parallel` feature (default) runs criticality subset enumeration and
//! campaign samples on the rayon pool; every result is identical to the
//! sequential fallback.

pub mod closure;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod matching;
pub mod spectral;
pub mod verify;

mod bits;

pub use error::Error;
pub use graph::{binomial, ExtremalParams, Graph};
pub use matching::{CriticalityVerdict, Matching, VerdictReason};
