//! Tools for studying ubiquity of hypergraphs with boundary in uniform
//! spanning forests on `Z^d`.
//!
//! The crate has four layers:
//!
//! * [`hypergraph`] and [`format`]: hypergraphs with boundary, their
//!   subhypergraphs, coarsenings and quotients, and a small text format.
//! * [`weight`] and [`classify`]: exact rational weights, the min-max and
//!   max-min optimizations over coarsenings and subhypergraphs, and the
//!   ubiquity verdicts built on them.
//! * [`ultrametric`]: maximization of sums of minimum ultrametric distances.
//! * [`sim`]: Wilson's algorithm on a wired box and the Monte Carlo
//!   estimators that sit on top of it.

pub mod partition;
pub mod hypergraph;
pub mod format;
pub mod weight;
pub mod catalog;
pub mod classify;
pub mod ultrametric;
pub mod sim;
pub mod cli;

/// Exact rational used for every reported weight and threshold.
pub type Rational = num_rational::Rational64;

pub use hypergraph::{
    EdgePartition, Hypergraph, HypergraphError, HypergraphSpec, Selector, VertexMergePlan,
};
pub use partition::SetPartition;
