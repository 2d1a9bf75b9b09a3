//! Wired uniform spanning forests on finite boxes of `Z^d`.
//!
//! The box `{0..L-1}^d` has every site on a face joined to one extra wired
//! vertex, once per missing neighbour, so every site has degree `2d`.
//! Forests are sampled with Wilson's algorithm rooted at the wired vertex and
//! reported after deleting it.

pub mod components;
pub mod estimate;
pub mod lattice;
pub mod spread;
pub mod wilson;
pub mod witness;

use thiserror::Error;

pub use components::{component_graph, component_hyperedges, meets_components, ComponentGraph};
pub use estimate::{
    estimate_connection, estimate_r, ConnectionEstimate, EstimateConfig, REstimate,
};
pub use lattice::{bracket, dyadic_shell, l1_distance, LatticeBox, Point};
pub use spread::{spread, spread_greedy, tree_product, SpreadResult};
pub use wilson::{loop_erase, random_walk_until, wilson_wired, LatticeForest, PartialWilson};
pub use witness::{count_witnesses, for_each_witness, witness_search, witness_weight, Witness};

/// Bytes of working memory per box vertex and sampling worker.
pub const BYTES_PER_VERTEX: u64 = 16;

/// Default memory budget when `USF_LAB_MEM_BUDGET_MB` is unset.
pub const DEFAULT_MEM_BUDGET_MB: u64 = 2048;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("box needs about {needed_mb} MB but the budget is {budget_mb} MB")]
    OverBudget { needed_mb: u64, budget_mb: u64 },
    #[error("point {0:?} is outside the box")]
    PointOutside(Vec<i64>),
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("no radius up to {r_max} met {m} components in any sample")]
    InconclusiveAtCap { r_max: usize, m: usize },
}

/// Budget from `USF_LAB_MEM_BUDGET_MB`, or the default.
pub fn memory_budget_mb() -> u64 {
    std::env::var("USF_LAB_MEM_BUDGET_MB")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MEM_BUDGET_MB)
}

/// Refuses boxes whose working set for `workers` samplers exceeds the
/// budget.
pub fn check_memory(d: usize, side: usize, workers: usize, budget_mb: u64) -> Result<(), SimError> {
    let sites = (side as u64).checked_pow(d as u32);
    let needed = sites
        .and_then(|s| s.checked_add(1))
        .and_then(|n| n.checked_mul(BYTES_PER_VERTEX))
        .and_then(|b| b.checked_mul(workers.max(1) as u64));
    let needed_mb = needed.map_or(u64::MAX, |b| b.div_ceil(1 << 20));
    if needed_mb > budget_mb {
        return Err(SimError::OverBudget {
            needed_mb,
            budget_mb,
        });
    }
    Ok(())
}
