//! Ubiquity verdicts built on the weight calculus.
//!
//! A hypergraph with boundary is faithfully ubiquitous in dimension `d > 4`
//! exactly when its min-max value is at most zero, and ubiquitous exactly when
//! some admissible quotient is faithfully ubiquitous.

use crate::hypergraph::{EdgePartition, Hypergraph, Selector, VertexMergePlan};
use crate::weight::{self, eta, rational, WeightError};
use crate::Rational;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graph,
    Hypergraph,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph" => Ok(Mode::Graph),
            "hypergraph" => Ok(Mode::Hypergraph),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graph => "graph",
            Mode::Hypergraph => "hypergraph",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("not a simple graph: {0}; rerun with --mode hypergraph")]
    NotAGraph(String),
    #[error("not a forest: {0}")]
    NotAForest(String),
    #[error("dimension {0} is out of range for this operation")]
    BadDimension(Rational),
    #[error(
        "the verdict depends on quotients with edge degree up to {needed}; \
         supply an edge-degree cap"
    )]
    MissingCap { needed: usize },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_partition<S: Serializer>(p: &EdgePartition, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.0.to_string())
}

fn ser_plan<S: Serializer>(p: &Option<VertexMergePlan>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.0.to_string()),
        None => s.serialize_none(),
    }
}

/// Verdicts for one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionVerdict {
    pub dimension: i64,
    pub mode: Mode,
    pub faithfully_ubiquitous: bool,
    /// `None` when only the faithful question was asked and the answer is
    /// no; a quotient scan is needed to settle it.
    pub ubiquitous: Option<bool>,
    #[serde(serialize_with = "ser_plan")]
    pub witness_quotient: Option<VertexMergePlan>,
    /// Readable form of the witness quotient, in vertex ids.
    pub witness_quotient_text: Option<String>,
    #[serde(serialize_with = "ser_rational")]
    pub minmax_value: Rational,
    #[serde(serialize_with = "ser_partition")]
    pub witness_coarsening: EdgePartition,
    pub witness_coarsening_text: String,
    pub witness_subhypergraph: Selector,
    pub r_requirement: &'static str,
    pub edge_degree_cap: Option<usize>,
    pub quotients_scanned: usize,
    pub quotients_skipped: usize,
}

pub fn r_requirement(mode: Mode) -> &'static str {
    match mode {
        Mode::Graph => "any r >= 1",
        Mode::Hypergraph => "r >= R_G(H)",
    }
}

fn check_dimension(d: i64) -> Result<(), ClassifyError> {
    if d < 5 {
        Err(ClassifyError::BadDimension(rational(d)))
    } else {
        Ok(())
    }
}

/// Graph mode accepts only simple graphs: edges of degree at most two and no
/// two edges over the same vertex set.
pub fn check_graph(h: &Hypergraph) -> Result<(), ClassifyError> {
    for e in 0..h.edge_count() {
        if h.edge_members(e).len() > 2 {
            return Err(ClassifyError::NotAGraph(format!(
                "edge `{}` has degree {}",
                h.edge_name(e),
                h.edge_members(e).len()
            )));
        }
    }
    if !h.is_simple() {
        return Err(ClassifyError::NotAGraph("parallel edges".into()));
    }
    Ok(())
}

/// Faithful ubiquity by the min-max criterion.
pub fn classify_faithful(h: &Hypergraph, d: i64, mode: Mode) -> Result<DimensionVerdict, ClassifyError> {
    check_dimension(d)?;
    if mode == Mode::Graph {
        check_graph(h)?;
    }
    let m = weight::min_max(h, rational(d))?;
    let faithful = m.value <= Rational::zero();
    Ok(DimensionVerdict {
        dimension: d,
        mode,
        faithfully_ubiquitous: faithful,
        ubiquitous: faithful.then_some(true),
        witness_quotient: faithful.then(|| VertexMergePlan::identity(h)),
        witness_quotient_text: faithful.then(|| VertexMergePlan::identity(h).describe(h)),
        minmax_value: m.value,
        witness_coarsening_text: m.witness_coarsening.describe(h),
        witness_coarsening: m.witness_coarsening,
        witness_subhypergraph: m.witness_subhypergraph,
        r_requirement: r_requirement(mode),
        edge_degree_cap: None,
        quotients_scanned: 0,
        quotients_skipped: 0,
    })
}

/// The simple graph carried by a quotient of a graph: edges collapsed onto a
/// single vertex are dropped and parallel edges are kept once.
pub fn simplify_graph(h: &Hypergraph) -> Hypergraph {
    let mut seen = BTreeSet::new();
    let spec = h.to_spec();
    let edges: Vec<(String, Vec<String>)> = spec
        .edges
        .into_iter()
        .filter(|(_, m)| m.len() >= 2)
        .filter(|(_, m)| {
            let mut key = m.clone();
            key.sort();
            seen.insert(key)
        })
        .collect();
    Hypergraph::new(spec.boundary, spec.interior, edges).expect("subset of a valid hypergraph")
}

/// Connected forest.
pub fn is_tree(h: &Hypergraph) -> bool {
    h.is_forest() && h.edge_count() + 1 == h.vertex_count()
}

/// Order of the quotient scan: most blocks first, then lexicographic.
fn quotient_order(h: &Hypergraph) -> Vec<VertexMergePlan> {
    let mut plans: Vec<VertexMergePlan> = h.vertex_merge_plans().collect();
    plans.sort_by(|a, b| match b.0.block_count().cmp(&a.0.block_count()) {
        Ordering::Equal => a.cmp(b),
        o => o,
    });
    plans
}

/// Ubiquity by scanning quotients.
///
/// The identity quotient is tried first. Other quotients are admissible when
/// their largest edge degree is at most two, or at most `cap` when a cap is
/// given; `cap` stands in for the condition `R_G(H') <= r`. Without a cap, if
/// only quotients with larger edges are faithfully ubiquitous the answer
/// depends on `r` and `MissingCap` is returned. Graph mode reads each
/// quotient as the simple graph it carries.
pub fn classify_ubiquitous(
    h: &Hypergraph,
    d: i64,
    mode: Mode,
    cap: Option<usize>,
) -> Result<DimensionVerdict, ClassifyError> {
    let mut verdict = classify_faithful(h, d, mode)?;
    verdict.edge_degree_cap = cap;
    if verdict.faithfully_ubiquitous {
        verdict.ubiquitous = Some(true);
        return Ok(verdict);
    }
    if mode == Mode::Graph && is_tree(h) {
        // a tree is ubiquitous exactly when it is faithfully ubiquitous
        verdict.ubiquitous = Some(false);
        return Ok(verdict);
    }
    let mut scanned = 0;
    let mut skipped = 0;
    let mut needs_cap: Option<usize> = None;
    let identity = VertexMergePlan::identity(h);
    for plan in quotient_order(h) {
        if plan == identity {
            continue;
        }
        let q = h.quotient(&plan).expect("plans respect the boundary");
        let q = match mode {
            Mode::Graph => simplify_graph(&q),
            Mode::Hypergraph => q,
        };
        let deg = q.max_edge_degree();
        let admissible = match (mode, cap) {
            (Mode::Graph, _) => true,
            (Mode::Hypergraph, Some(c)) => deg <= c.max(2),
            (Mode::Hypergraph, None) => deg <= 2,
        };
        if !admissible {
            skipped += 1;
            if cap.is_none() && needs_cap.map_or(true, |n| deg < n) {
                let m = weight::min_max(&q, rational(d))?;
                if m.value <= Rational::zero() {
                    needs_cap = Some(deg);
                }
            }
            continue;
        }
        scanned += 1;
        let m = weight::min_max(&q, rational(d))?;
        if m.value <= Rational::zero() {
            verdict.ubiquitous = Some(true);
            verdict.witness_quotient_text = Some(plan.describe(h));
            verdict.witness_quotient = Some(plan);
            verdict.quotients_scanned = scanned;
            verdict.quotients_skipped = skipped;
            return Ok(verdict);
        }
    }
    if let Some(needed) = needs_cap {
        return Err(ClassifyError::MissingCap { needed });
    }
    verdict.ubiquitous = Some(false);
    verdict.quotients_scanned = scanned;
    verdict.quotients_skipped = skipped;
    Ok(verdict)
}

/// A rational or `+∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtRational {
    Finite(Rational),
    Infinite,
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinite) => Ordering::Less,
            (ExtRational::Infinite, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinite, ExtRational::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCriterionReport {
    pub max_ratio: ExtRational,
    #[serde(serialize_with = "ser_rational")]
    pub threshold: Rational,
    pub verdict: bool,
    /// Edge ids of a subgraph attaining `max_ratio`.
    pub witness_edges: Vec<String>,
}

/// The forest criterion: the largest `|E'| / |V∘(E')|` over nonempty edge
/// sets, counting interior endpoints only, against `(d-4)/(d-8)`.
pub fn tree_criterion(t: &Hypergraph, d: Rational) -> Result<TreeCriterionReport, ClassifyError> {
    if d <= rational(8) {
        return Err(ClassifyError::BadDimension(d));
    }
    if !t.is_forest() {
        return Err(ClassifyError::NotAForest(
            "expected edges of degree two with no cycle".into(),
        ));
    }
    let ne = t.edge_count();
    if ne > 30 {
        return Err(WeightError::TooManyEdges { edges: ne, cap: 30 }.into());
    }
    let masks = t.edge_masks();
    let int = t.interior_mask();
    let mut best: Option<(ExtRational, u64)> = None;
    for sub in 1u64..(1u64 << ne) {
        let mut union = 0u64;
        for e in 0..ne {
            if sub >> e & 1 == 1 {
                union |= masks[e];
            }
        }
        let vi = (union & int).count_ones() as i64;
        let ratio = if vi == 0 {
            ExtRational::Infinite
        } else {
            ExtRational::Finite(Rational::new(sub.count_ones() as i64, vi))
        };
        if best.map_or(true, |(b, _)| ratio > b) {
            best = Some((ratio, sub));
        }
    }
    let threshold = (d - 4) / (d - 8);
    let (max_ratio, sub) = best.unwrap_or((ExtRational::Finite(Rational::zero()), 0));
    Ok(TreeCriterionReport {
        max_ratio,
        threshold,
        verdict: max_ratio <= ExtRational::Finite(threshold),
        witness_edges: (0..ne)
            .filter(|e| sub >> e & 1 == 1)
            .map(|e| t.edge_name(e).to_string())
            .collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalDimensions {
    pub faithful: Option<i64>,
    pub ubiquitous: Option<i64>,
}

/// Largest `d` in `lo..=hi` where `pred` holds, assuming it holds on an
/// initial segment. `None` if it fails at `lo`.
fn last_true<F>(lo: i64, hi: i64, mut pred: F) -> Result<Option<i64>, ClassifyError>
where
    F: FnMut(i64) -> Result<bool, ClassifyError>,
{
    if lo > hi || !pred(lo)? {
        return Ok(None);
    }
    let (mut good, mut bad) = (lo, hi + 1);
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        if pred(mid)? {
            good = mid;
        } else {
            bad = mid;
        }
    }
    Ok(Some(good))
}

/// Largest dimensions in `lo..=hi` with a positive faithful and ubiquity
/// verdict, found by bisection since both verdicts are monotone in `d`.
pub fn critical_dimensions(
    h: &Hypergraph,
    mode: Mode,
    lo: i64,
    hi: i64,
    cap: Option<usize>,
) -> Result<CriticalDimensions, ClassifyError> {
    check_dimension(lo)?;
    let faithful = last_true(lo, hi, |d| Ok(classify_faithful(h, d, mode)?.faithfully_ubiquitous))?;
    let start = faithful.unwrap_or(lo);
    let ubiquitous = last_true(start, hi, |d| {
        Ok(classify_ubiquitous(h, d, mode, cap)?.ubiquitous == Some(true))
    })?;
    Ok(CriticalDimensions {
        faithful,
        ubiquitous,
    })
}

/// Verdicts for every dimension in `lo..=hi`, computed in parallel.
pub fn profile(
    h: &Hypergraph,
    mode: Mode,
    lo: i64,
    hi: i64,
    cap: Option<usize>,
) -> Result<Vec<DimensionVerdict>, ClassifyError> {
    use rayon::prelude::*;
    (lo..=hi)
        .into_par_iter()
        .map(|d| classify_ubiquitous(h, d, mode, cap))
        .collect()
}

/// Proper bordered subhypergraphs with at least one edge and `η_d = 0`.
pub fn bordered_zero_subhypergraphs(h: &Hypergraph, d: Rational) -> impl Iterator<Item = Selector> + '_ {
    let full = h.full_selector();
    h.subhypergraphs().filter(move |s| {
        s.boundary.len() == h.boundary_count()
            && !s.edges.is_empty()
            && *s != full
            && h.is_bordered(s)
            && eta(&h.materialize(s).expect("legal selector"), d).is_zero()
    })
}

/// No edge of degree at most `d/(d-4)` and no proper, non-trivial bordered
/// subhypergraph with `η_d = 0`. Requires `d > 4`.
pub fn is_d_basic(h: &Hypergraph, d: Rational) -> Result<bool, ClassifyError> {
    if d <= rational(4) {
        return Err(ClassifyError::BadDimension(d));
    }
    let bound = d / (d - 4);
    if h
        .edge_degrees()
        .iter()
        .any(|&k| rational(k as i64) <= bound)
    {
        return Ok(false);
    }
    Ok(bordered_zero_subhypergraphs(h, d).next().is_none())
}
