//! Weights of hypergraphs with boundary and the min-max problem over
//! coarsenings and subhypergraphs.
//!
//! With `A = d - 2α` the generalized apparent weight is
//! `η_{d,α}(H) = A·Δ - d·|E| - A·|V∘|`, and `η_d` is the case `α = 2`.
//! Everything reported is an exact [`Rational`]. Partition scans work on
//! integers scaled by a common denominator of `A` and `d`.

use crate::hypergraph::{EdgePartition, Hypergraph, Selector};
use crate::partition::{scan_partition_masks, SetPartition};
use crate::Rational;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

/// Largest edge count accepted by the exact partition scans unless the caller
/// raises it. Bell(12) is about 4.2 million.
pub const DEFAULT_EDGE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("{edges} edges exceeds the partition-scan cap of {cap}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("{0} vertices exceeds the bitmask limit of 64")]
    TooManyVertices(usize),
    #[error("dimension {0} is below 4")]
    BadDimension(Rational),
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// `η_{d,α}(h)`.
pub fn eta_alpha(h: &Hypergraph, d: Rational, alpha: Rational) -> Rational {
    let a = d - alpha * 2;
    a * (h.delta() as i64) - d * (h.edge_count() as i64) - a * (h.interior_count() as i64)
}

/// `η_d(h)`, the `α = 2` case.
pub fn eta(h: &Hypergraph, d: Rational) -> Rational {
    eta_alpha(h, d, rational(2))
}

pub fn is_buoyant(h: &Hypergraph, d: Rational) -> bool {
    eta(h, d) <= Rational::zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaValue {
    pub d: String,
    pub alpha: String,
    pub eta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub delta: usize,
    pub edge_count: usize,
    pub interior_count: usize,
    pub eta: Vec<EtaValue>,
}

pub fn weight_report(h: &Hypergraph, queries: &[(Rational, Rational)]) -> WeightReport {
    WeightReport {
        delta: h.delta(),
        edge_count: h.edge_count(),
        interior_count: h.interior_count(),
        eta: queries
            .iter()
            .map(|&(d, alpha)| EtaValue {
                d: d.to_string(),
                alpha: alpha.to_string(),
                eta: eta_alpha(h, d, alpha).to_string(),
            })
            .collect(),
    }
}

/// `η_d` scaled to integers: `η_d · q = a·(Δ - |V∘|) - b·|E|`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scaled {
    a: i128,
    b: i128,
    q: i128,
}

impl Scaled {
    pub(crate) fn new(d: Rational) -> Self {
        let a = d - 4;
        let q = a.denom().lcm(d.denom());
        Scaled {
            a: (a * q).to_integer() as i128,
            b: (d * q).to_integer() as i128,
            q: q as i128,
        }
    }

    pub(crate) fn eval(&self, delta_minus_interior: i64, edges: i64) -> i128 {
        self.a * delta_minus_interior as i128 - self.b * edges as i128
    }

    pub(crate) fn unscale(&self, v: i128) -> Rational {
        Rational::new(v as i64, self.q as i64)
    }
}

fn check_size(h: &Hypergraph, cap: usize) -> Result<(), WeightError> {
    if h.edge_count() > cap {
        return Err(WeightError::TooManyEdges {
            edges: h.edge_count(),
            cap,
        });
    }
    if h.vertex_count() > 64 {
        return Err(WeightError::TooManyVertices(h.vertex_count()));
    }
    Ok(())
}

fn check_dim(d: Rational) -> Result<(), WeightError> {
    if d < rational(4) {
        Err(WeightError::BadDimension(d))
    } else {
        Ok(())
    }
}

/// `η̂_d(h)`: the least `η_d` over coarsenings, with the achieving edge
/// partition. Ties go to fewer blocks, then to the lexicographically least
/// partition.
///
/// For a forest and `d ≥ 4` every merge raises `η_d` by at least 4, so the
/// all-singletons partition is returned without a scan and the edge cap does
/// not apply.
pub fn eta_hat(h: &Hypergraph, d: Rational) -> Result<(Rational, EdgePartition), WeightError> {
    eta_hat_with_cap(h, d, DEFAULT_EDGE_CAP)
}

pub fn eta_hat_with_cap(
    h: &Hypergraph,
    d: Rational,
    cap: usize,
) -> Result<(Rational, EdgePartition), WeightError> {
    if d >= rational(4) && h.is_forest() {
        return Ok((eta(h, d), EdgePartition::singletons(h)));
    }
    check_size(h, cap)?;
    let s = Scaled::new(d);
    let masks = h.edge_masks();
    let interior = h.interior_count() as i64;
    let mut best: Option<(i128, usize, SetPartition)> = None;
    scan_partition_masks(&masks, |labels, blocks| {
        let delta: i64 = blocks.iter().map(|m| m.count_ones() as i64).sum();
        let v = s.eval(delta - interior, blocks.len() as i64);
        let better = match &best {
            None => true,
            Some((bv, bk, bp)) => {
                v < *bv
                    || (v == *bv && blocks.len() < *bk)
                    || (v == *bv && blocks.len() == *bk && SetPartition::from_labels(labels) < *bp)
            }
        };
        if better {
            best = Some((v, blocks.len(), SetPartition::from_labels(labels)));
        }
    });
    let (v, _, p) = best.expect("at least one partition");
    Ok((s.unscale(v), EdgePartition(p)))
}

/// An edge partition attaining `η̂_d`.
pub fn d_optimal_coarsening(h: &Hypergraph, d: Rational) -> Result<EdgePartition, WeightError> {
    Ok(eta_hat(h, d)?.1)
}

/// Maximum of `η_d` over subhypergraphs, for `d ≥ 4`.
///
/// For a fixed edge set each vertex contributes independently: a boundary
/// vertex adds `(d-4)·deg'`, an interior one `(d-4)·(deg'-1)`. So boundary
/// vertices touching the edge set and interior vertices of restricted degree
/// at least 2 are taken, and only the `2^|E|` edge sets are scanned. An edge
/// left with no chosen vertex gets its first degree-1 interior vertex, which
/// changes nothing.
pub fn fast_max_subhypergraph_eta(
    h: &Hypergraph,
    d: Rational,
) -> Result<(Rational, Selector), WeightError> {
    check_dim(d)?;
    if h.edge_count() > 30 {
        return Err(WeightError::TooManyEdges {
            edges: h.edge_count(),
            cap: 30,
        });
    }
    if h.vertex_count() > 64 {
        return Err(WeightError::TooManyVertices(h.vertex_count()));
    }
    let s = Scaled::new(d);
    let masks = h.edge_masks();
    let degs: Vec<i64> = h.edge_degrees().iter().map(|&x| x as i64).collect();
    let int = h.interior_mask();
    let ne = masks.len();
    let mut best = (0i128, 0u64);
    for sub in 1u64..(1u64 << ne) {
        let mut union = 0u64;
        let mut delta = 0i64;
        for e in 0..ne {
            if sub >> e & 1 == 1 {
                union |= masks[e];
                delta += degs[e];
            }
        }
        let v = s.eval(delta - (union & int).count_ones() as i64, sub.count_ones() as i64);
        if v > best.0 {
            best = (v, sub);
        }
    }
    Ok((s.unscale(best.0), selector_for_edges(h, best.1)))
}

/// The vertex choice described on [`fast_max_subhypergraph_eta`].
pub(crate) fn selector_for_edges(h: &Hypergraph, sub: u64) -> Selector {
    let edges: Vec<usize> = (0..h.edge_count()).filter(|e| sub >> e & 1 == 1).collect();
    let mut deg = vec![0usize; h.vertex_count()];
    for &e in &edges {
        for &v in h.edge_members(e) {
            deg[v] += 1;
        }
    }
    let mut boundary: Vec<usize> = h.boundary_indices().filter(|&v| deg[v] > 0).collect();
    if boundary.is_empty() {
        boundary.push(0);
    }
    let mut interior: Vec<usize> = h.interior_indices().filter(|&v| deg[v] >= 2).collect();
    for &e in &edges {
        let covered = h
            .edge_members(e)
            .iter()
            .any(|v| boundary.contains(v) || interior.contains(v));
        if !covered {
            // every member is interior with restricted degree 1
            interior.push(h.edge_members(e)[0]);
        }
    }
    interior.sort_unstable();
    Selector {
        boundary,
        interior,
        edges,
    }
}

/// Solution of the min-max problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMaxSolution {
    pub value: Rational,
    /// Edge partition of the input hypergraph.
    pub witness_coarsening: EdgePartition,
    /// The coarsened hypergraph itself.
    pub coarsening: Hypergraph,
    /// Selector into [`MinMaxSolution::coarsening`] attaining `value`.
    pub witness_subhypergraph: Selector,
}

/// `min over coarsenings H' of max over subhypergraphs H'' of H' of η_d(H'')`
/// for `d ≥ 4`. Any `d`-optimal coarsening attains the outer minimum, so this
/// takes the optimal coarsening and maximizes over its subhypergraphs.
pub fn min_max(h: &Hypergraph, d: Rational) -> Result<MinMaxSolution, WeightError> {
    min_max_with_cap(h, d, DEFAULT_EDGE_CAP)
}

pub fn min_max_with_cap(
    h: &Hypergraph,
    d: Rational,
    cap: usize,
) -> Result<MinMaxSolution, WeightError> {
    check_dim(d)?;
    let (_, p) = eta_hat_with_cap(h, d, cap)?;
    let coarsening = h.coarsen(&p).expect("partition of the edge set");
    let (value, sel) = fast_max_subhypergraph_eta(&coarsening, d)?;
    Ok(MinMaxSolution {
        value,
        witness_coarsening: p,
        coarsening,
        witness_subhypergraph: sel,
    })
}

/// The plain double loop: every coarsening, every subhypergraph of it.
/// Exponentially slower than [`min_max`]; kept as a reference.
pub fn min_max_exhaustive(h: &Hypergraph, d: Rational) -> Result<MinMaxSolution, WeightError> {
    check_size(h, DEFAULT_EDGE_CAP)?;
    let mut best: Option<MinMaxSolution> = None;
    for p in h.edge_partitions() {
        let c = h.coarsen(&p).expect("partition of the edge set");
        let mut inner: Option<(Rational, Selector)> = None;
        for s in c.subhypergraphs() {
            let v = eta(&c.materialize(&s).expect("legal selector"), d);
            if inner.as_ref().map_or(true, |(bv, _)| v > *bv) {
                inner = Some((v, s));
            }
        }
        let (v, s) = inner.expect("some subhypergraph");
        if best.as_ref().map_or(true, |b| v < b.value) {
            best = Some(MinMaxSolution {
                value: v,
                witness_coarsening: p,
                coarsening: c,
                witness_subhypergraph: s,
            });
        }
    }
    Ok(best.expect("some partition"))
}

/// For every subhypergraph, the smallest `Δ - |V∘|` reachable with each
/// block count, and the largest. Enough to evaluate `η̂_d` of every
/// subhypergraph at any `d` without rescanning partitions.
#[derive(Clone, Debug)]
pub struct MaxMinTable {
    // per subhypergraph: (blocks, min X, max X) with X = Δ - |V∘|
    rows: Vec<Vec<(i64, i64, i64)>>,
    selectors: Vec<Selector>,
}

impl MaxMinTable {
    pub fn new(h: &Hypergraph) -> Result<Self, WeightError> {
        check_size(h, DEFAULT_EDGE_CAP)?;
        let nv = h.vertex_count();
        let nb = h.boundary_count();
        let ne = h.edge_count();
        if nv + ne >= 63 {
            return Err(WeightError::TooManyVertices(nv));
        }
        let masks = h.edge_masks();
        let int = h.interior_mask();
        let mut rows = Vec::new();
        let mut selectors = Vec::new();
        for sub in 0u64..(1u64 << ne) {
            let sub_masks: Vec<u64> = (0..ne).filter(|e| sub >> e & 1 == 1).map(|e| masks[e]).collect();
            // partitions of the chosen edges, as lists of block unions
            let mut parts: Vec<Vec<u64>> = Vec::new();
            scan_partition_masks(&sub_masks, |_, blocks| parts.push(blocks.to_vec()));
            for vmask in 0u64..(1u64 << nv) {
                if vmask & ((1u64 << nb) - 1) == 0 {
                    continue;
                }
                if sub_masks.iter().any(|m| m & vmask == 0) {
                    continue;
                }
                let vint = (vmask & int).count_ones() as i64;
                let mut row: Vec<(i64, i64, i64)> = Vec::new();
                for blocks in &parts {
                    let x: i64 =
                        blocks.iter().map(|b| (b & vmask).count_ones() as i64).sum::<i64>() - vint;
                    let k = blocks.len() as i64;
                    match row.iter_mut().find(|r| r.0 == k) {
                        Some(r) => {
                            r.1 = r.1.min(x);
                            r.2 = r.2.max(x);
                        }
                        None => row.push((k, x, x)),
                    }
                }
                rows.push(row);
                selectors.push(Selector {
                    boundary: (0..nb).filter(|v| vmask >> v & 1 == 1).collect(),
                    interior: (nb..nv).filter(|v| vmask >> v & 1 == 1).collect(),
                    edges: (0..ne).filter(|e| sub >> e & 1 == 1).collect(),
                });
            }
        }
        Ok(MaxMinTable { rows, selectors })
    }

    /// `max over subhypergraphs of η̂_d`, with a subhypergraph attaining it.
    pub fn evaluate(&self, d: Rational) -> (Rational, Selector) {
        let s = Scaled::new(d);
        let mut best: Option<(i128, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            let inner = row
                .iter()
                .map(|&(k, lo, hi)| s.eval(if s.a >= 0 { lo } else { hi }, k))
                .min()
                .expect("nonempty row");
            if best.map_or(true, |(bv, _)| inner > bv) {
                best = Some((inner, i));
            }
        }
        let (v, i) = best.expect("nonempty boundary gives a subhypergraph");
        (s.unscale(v), self.selectors[i].clone())
    }

    pub fn subhypergraph_count(&self) -> usize {
        self.rows.len()
    }
}

/// `max over subhypergraphs H'' of η̂_d(H'')`.
pub fn max_min(h: &Hypergraph, d: Rational) -> Result<Rational, WeightError> {
    check_dim(d)?;
    Ok(MaxMinTable::new(h)?.evaluate(d).0)
}
