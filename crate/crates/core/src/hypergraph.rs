//! Finite hypergraphs with boundary.
//!
//! Vertices are split into a nonempty boundary and an interior; edges carry
//! their own ids so parallel edges are allowed. Ids are kept in lexicographic
//! order: boundary vertices first, then interior vertices, then edges, which
//! fixes the index of every vertex and edge.

use crate::partition::{set_partitions, RestrictedGrowth, SetPartition};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("the boundary vertex set is empty")]
    EmptyBoundary,
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    DanglingIncidence { edge: String, vertex: String },
    #[error("edge `{0}` is incident to no vertex")]
    EdgeWithNoVertex(String),
    #[error("id `{0}` is used more than once")]
    DuplicateId(String),
    #[error("selected edge `{0}` has no selected incident vertex")]
    OrphanEdge(String),
    #[error("merge block contains boundary vertices `{0}` and `{1}`")]
    BoundaryCollision(String, String),
    #[error("index {0} is out of range")]
    BadIndex(usize),
    #[error("partition does not cover the {0} set exactly")]
    BadPartition(&'static str),
}

/// Plain description of a hypergraph with boundary; the JSON mirror of the
/// text format. It is not validated until [`HypergraphSpec::build`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSpec {
    pub boundary: Vec<String>,
    #[serde(default)]
    pub interior: Vec<String>,
    #[serde(default)]
    pub edges: BTreeMap<String, Vec<String>>,
}

impl HypergraphSpec {
    /// Checks the structural invariants without building anything.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        let mut ids = BTreeSet::new();
        for v in self.boundary.iter().chain(&self.interior) {
            if !ids.insert(v.as_str()) {
                return Err(HypergraphError::DuplicateId(v.clone()));
            }
        }
        for e in self.edges.keys() {
            if !ids.insert(e.as_str()) {
                return Err(HypergraphError::DuplicateId(e.clone()));
            }
        }
        if self.boundary.is_empty() {
            return Err(HypergraphError::EmptyBoundary);
        }
        let vertices: BTreeSet<&str> = self
            .boundary
            .iter()
            .chain(&self.interior)
            .map(String::as_str)
            .collect();
        for (e, members) in &self.edges {
            if members.is_empty() {
                return Err(HypergraphError::EdgeWithNoVertex(e.clone()));
            }
            let mut seen = BTreeSet::new();
            for v in members {
                if !vertices.contains(v.as_str()) {
                    return Err(HypergraphError::DanglingIncidence {
                        edge: e.clone(),
                        vertex: v.clone(),
                    });
                }
                if !seen.insert(v.as_str()) {
                    return Err(HypergraphError::DuplicateId(format!("{e}:{v}")));
                }
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Hypergraph, HypergraphError> {
        Hypergraph::new(
            self.boundary.iter().cloned(),
            self.interior.iter().cloned(),
            self.edges.iter().map(|(e, m)| (e.clone(), m.clone())),
        )
    }
}

/// A validated hypergraph with boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_names: Vec<String>,
    boundary_count: usize,
    edge_names: Vec<String>,
    members: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds and validates a hypergraph from named parts.
    pub fn new<B, I, E, M, T>(boundary: B, interior: I, edges: E) -> Result<Self, HypergraphError>
    where
        B: IntoIterator,
        B::Item: Into<String>,
        I: IntoIterator,
        I::Item: Into<String>,
        E: IntoIterator<Item = (T, M)>,
        M: IntoIterator,
        M::Item: Into<String>,
        T: Into<String>,
    {
        let mut boundary: Vec<String> = boundary.into_iter().map(Into::into).collect();
        let mut interior: Vec<String> = interior.into_iter().map(Into::into).collect();
        let mut edge_list: Vec<(String, Vec<String>)> = edges
            .into_iter()
            .map(|(e, m)| (e.into(), m.into_iter().map(Into::into).collect()))
            .collect();

        let mut ids = BTreeSet::new();
        for id in boundary
            .iter()
            .chain(&interior)
            .chain(edge_list.iter().map(|(e, _)| e))
        {
            if !ids.insert(id.clone()) {
                return Err(HypergraphError::DuplicateId(id.clone()));
            }
        }
        if boundary.is_empty() {
            return Err(HypergraphError::EmptyBoundary);
        }
        boundary.sort();
        interior.sort();
        edge_list.sort_by(|a, b| a.0.cmp(&b.0));

        let vertex_names: Vec<String> = boundary.iter().chain(&interior).cloned().collect();
        let index: BTreeMap<&str, usize> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edge_names = Vec::with_capacity(edge_list.len());
        let mut members = Vec::with_capacity(edge_list.len());
        for (e, vs) in &edge_list {
            if vs.is_empty() {
                return Err(HypergraphError::EdgeWithNoVertex(e.clone()));
            }
            let mut m = Vec::with_capacity(vs.len());
            for v in vs {
                match index.get(v.as_str()) {
                    Some(&i) => m.push(i),
                    None => {
                        return Err(HypergraphError::DanglingIncidence {
                            edge: e.clone(),
                            vertex: v.clone(),
                        })
                    }
                }
            }
            m.sort_unstable();
            if m.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateId(format!("{e}:{}", vs[0])));
            }
            edge_names.push(e.clone());
            members.push(m);
        }
        Ok(Hypergraph {
            vertex_names,
            boundary_count: boundary.len(),
            edge_names,
            members,
        })
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            boundary: self.boundary_names().map(str::to_string).collect(),
            interior: self.interior_names().map(str::to_string).collect(),
            edges: (0..self.edge_count())
                .map(|e| {
                    (
                        self.edge_names[e].clone(),
                        self.members[e]
                            .iter()
                            .map(|&v| self.vertex_names[v].clone())
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    /// Always succeeds on a constructed value; kept so callers holding a
    /// `Hypergraph` can assert the invariants explicitly.
    pub fn validate(&self) -> Result<(), HypergraphError> {
        self.to_spec().validate()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn interior_count(&self) -> usize {
        self.vertex_names.len() - self.boundary_count
    }

    pub fn edge_count(&self) -> usize {
        self.members.len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.boundary_count
    }

    pub fn boundary_indices(&self) -> std::ops::Range<usize> {
        0..self.boundary_count
    }

    pub fn interior_indices(&self) -> std::ops::Range<usize> {
        self.boundary_count..self.vertex_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edge_names[e]
    }

    pub fn boundary_names(&self) -> impl Iterator<Item = &str> {
        self.vertex_names[..self.boundary_count].iter().map(String::as_str)
    }

    pub fn interior_names(&self) -> impl Iterator<Item = &str> {
        self.vertex_names[self.boundary_count..].iter().map(String::as_str)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edge_names.iter().position(|e| e == name)
    }

    /// Sorted vertex indices incident to edge `e`.
    pub fn edge_members(&self, e: usize) -> &[usize] {
        &self.members[e]
    }

    pub fn incident(&self, v: usize, e: usize) -> bool {
        self.members[e].binary_search(&v).is_ok()
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for m in &self.members {
            for &v in m {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn edge_degrees(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Degrees keyed by id.
    pub fn degrees(&self) -> Degrees {
        let vd = self.vertex_degrees();
        Degrees {
            vertices: self
                .vertex_names
                .iter()
                .cloned()
                .zip(vd)
                .collect(),
            edges: self
                .edge_names
                .iter()
                .cloned()
                .zip(self.edge_degrees())
                .collect(),
        }
    }

    /// Total weight: the number of incident (vertex, edge) pairs.
    pub fn delta(&self) -> usize {
        self.members.iter().map(Vec::len).sum()
    }

    pub fn max_edge_degree(&self) -> usize {
        self.members.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// No two distinct edges share the same incident vertex set.
    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<&Vec<usize>> = self.members.iter().collect();
        set.len() == self.members.len()
    }

    /// Every edge has exactly two vertices and the resulting graph has no
    /// cycle; parallel edges count as a cycle.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for m in &self.members {
            if m.len() != 2 {
                return false;
            }
            let (a, b) = (find(&mut parent, m[0]), find(&mut parent, m[1]));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Vertex bitmask of each edge. Requires at most 64 vertices.
    pub(crate) fn edge_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count() <= 64, "bitmask view needs at most 64 vertices");
        self.members
            .iter()
            .map(|m| m.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
            .collect()
    }

    pub(crate) fn interior_mask(&self) -> u64 {
        self.interior_indices().fold(0u64, |acc, v| acc | (1u64 << v))
    }

    /// Restricts to the vertices and edges named by `s`.
    pub fn materialize(&self, s: &Selector) -> Result<Hypergraph, HypergraphError> {
        s.check_against(self)?;
        let chosen: BTreeSet<usize> = s.vertices().collect();
        let mut edges = Vec::with_capacity(s.edges.len());
        for &e in &s.edges {
            let m: Vec<String> = self.members[e]
                .iter()
                .filter(|v| chosen.contains(v))
                .map(|&v| self.vertex_names[v].clone())
                .collect();
            if m.is_empty() {
                return Err(HypergraphError::OrphanEdge(self.edge_names[e].clone()));
            }
            edges.push((self.edge_names[e].clone(), m));
        }
        Hypergraph::new(
            s.boundary.iter().map(|&v| self.vertex_names[v].clone()),
            s.interior.iter().map(|&v| self.vertex_names[v].clone()),
            edges,
        )
    }

    /// Merges the edges in each block of `p` into one edge whose incident
    /// set is the union of the block's incident sets.
    pub fn coarsen(&self, p: &EdgePartition) -> Result<Hypergraph, HypergraphError> {
        if p.0.len() != self.edge_count() {
            return Err(HypergraphError::BadPartition("edge"));
        }
        let edges = p.0.blocks().iter().map(|block| {
            let name: Vec<&str> = block.iter().map(|&e| self.edge_names[e].as_str()).collect();
            let mut union = BTreeSet::new();
            for &e in block {
                union.extend(self.members[e].iter().copied());
            }
            (
                name.join("+"),
                union
                    .into_iter()
                    .map(|v| self.vertex_names[v].clone())
                    .collect::<Vec<_>>(),
            )
        });
        Hypergraph::new(
            self.boundary_names().map(str::to_string),
            self.interior_names().map(str::to_string),
            edges,
        )
    }

    /// Merges the vertices in each block of `m`. A block holding a boundary
    /// vertex keeps that vertex's id; an interior block is named by joining
    /// its ids with `+`. Edge ids are unchanged.
    pub fn quotient(&self, m: &VertexMergePlan) -> Result<Hypergraph, HypergraphError> {
        if m.0.len() != self.vertex_count() {
            return Err(HypergraphError::BadPartition("vertex"));
        }
        let mut names = Vec::with_capacity(m.0.block_count());
        let mut boundary = Vec::new();
        let mut interior = Vec::new();
        for block in m.0.blocks() {
            let bs: Vec<usize> = block.iter().copied().filter(|&v| self.is_boundary(v)).collect();
            if bs.len() > 1 {
                return Err(HypergraphError::BoundaryCollision(
                    self.vertex_names[bs[0]].clone(),
                    self.vertex_names[bs[1]].clone(),
                ));
            }
            let name = match bs.first() {
                Some(&b) => {
                    boundary.push(self.vertex_names[b].clone());
                    self.vertex_names[b].clone()
                }
                None => {
                    let joined: Vec<&str> =
                        block.iter().map(|&v| self.vertex_names[v].as_str()).collect();
                    let n = joined.join("+");
                    interior.push(n.clone());
                    n
                }
            };
            names.push(name);
        }
        let labels = m.0.labels();
        let edges = (0..self.edge_count()).map(|e| {
            let img: BTreeSet<usize> = self.members[e].iter().map(|&v| labels[v]).collect();
            (
                self.edge_names[e].clone(),
                img.into_iter().map(|k| names[k].clone()).collect::<Vec<_>>(),
            )
        });
        Hypergraph::new(boundary, interior, edges)
    }

    /// Every selected edge has all of its incident vertices selected.
    pub fn is_full(&self, s: &Selector) -> bool {
        let chosen: BTreeSet<usize> = s.vertices().collect();
        s.edges
            .iter()
            .all(|&e| self.members[e].iter().all(|v| chosen.contains(v)))
    }

    /// The selection keeps the whole boundary, and every unselected vertex is
    /// incident to at most one selected edge.
    pub fn is_bordered(&self, s: &Selector) -> bool {
        if s.boundary.len() != self.boundary_count {
            return false;
        }
        let chosen: BTreeSet<usize> = s.vertices().collect();
        (0..self.vertex_count())
            .filter(|v| !chosen.contains(v))
            .all(|v| s.edges.iter().filter(|&&e| self.incident(v, e)).count() <= 1)
    }

    /// All edge partitions, in restricted-growth order.
    pub fn edge_partitions(&self) -> impl Iterator<Item = EdgePartition> {
        set_partitions(self.edge_count()).map(EdgePartition)
    }

    /// All vertex partitions with at most one boundary vertex per block.
    pub fn vertex_merge_plans(&self) -> impl Iterator<Item = VertexMergePlan> + '_ {
        let b = self.boundary_count;
        RestrictedGrowth::new(self.vertex_count())
            .filter(move |labels| {
                // boundary vertices occupy indices 0..b; distinct labels there
                let mut seen = BTreeSet::new();
                labels[..b].iter().all(|l| seen.insert(*l))
            })
            .map(|labels| VertexMergePlan(SetPartition::from_labels(&labels)))
    }

    /// Every legal subhypergraph selector, each exactly once.
    pub fn subhypergraphs(&self) -> Subhypergraphs<'_> {
        Subhypergraphs::new(self)
    }

    /// Selector for the whole hypergraph.
    pub fn full_selector(&self) -> Selector {
        Selector {
            boundary: self.boundary_indices().collect(),
            interior: self.interior_indices().collect(),
            edges: (0..self.edge_count()).collect(),
        }
    }

    /// Looks for an edge partition `p` with `coarsen(self, p)` isomorphic to
    /// `target`, with boundary vertices matched by id.
    pub fn refinement_witness(&self, target: &Hypergraph) -> Option<EdgePartition> {
        if target.edge_count() > self.edge_count()
            || target.interior_count() != self.interior_count()
            || !self.boundary_names().eq(target.boundary_names())
        {
            return None;
        }
        let k = target.edge_count();
        self.edge_partitions()
            .filter(|p| p.0.block_count() == k)
            .find(|p| match self.coarsen(p) {
                Ok(c) => isomorphic_with_boundary(&c, target),
                Err(_) => false,
            })
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<&str> = self.boundary_names().collect();
        let i: Vec<&str> = self.interior_names().collect();
        writeln!(f, "boundary: {}", b.join(" "))?;
        writeln!(f, "interior: {}", i.join(" "))?;
        for e in 0..self.edge_count() {
            let m: Vec<&str> = self.members[e]
                .iter()
                .map(|&v| self.vertex_names[v].as_str())
                .collect();
            writeln!(f, "edge {}: {}", self.edge_names[e], m.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degrees {
    pub vertices: BTreeMap<String, usize>,
    pub edges: BTreeMap<String, usize>,
}

/// Chooses a subhypergraph by index sets. Vertex indices are global
/// (boundary indices are below interior indices).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Selector {
    pub boundary: Vec<usize>,
    pub interior: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Selector {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().chain(&self.interior).copied()
    }

    fn check_against(&self, h: &Hypergraph) -> Result<(), HypergraphError> {
        if self.boundary.is_empty() {
            return Err(HypergraphError::EmptyBoundary);
        }
        for &v in &self.boundary {
            if !h.is_boundary(v) {
                return Err(HypergraphError::BadIndex(v));
            }
        }
        for &v in &self.interior {
            if v < h.boundary_count() || v >= h.vertex_count() {
                return Err(HypergraphError::BadIndex(v));
            }
        }
        for &e in &self.edges {
            if e >= h.edge_count() {
                return Err(HypergraphError::BadIndex(e));
            }
        }
        Ok(())
    }

    /// Each block of `p` lies inside or outside the selected edge set.
    pub fn is_subordinate(&self, p: &EdgePartition) -> bool {
        let chosen: BTreeSet<usize> = self.edges.iter().copied().collect();
        p.0.blocks().iter().all(|b| {
            let inside = b.iter().filter(|e| chosen.contains(e)).count();
            inside == 0 || inside == b.len()
        })
    }

    /// Selected edge ids and vertex ids, for reports.
    pub fn describe(&self, h: &Hypergraph) -> String {
        let vs: Vec<&str> = self.vertices().map(|v| h.vertex_name(v)).collect();
        let es: Vec<&str> = self.edges.iter().map(|&e| h.edge_name(e)).collect();
        format!("vertices [{}] edges [{}]", vs.join(" "), es.join(" "))
    }
}

/// Iterator over legal selectors: nonempty boundary subset, any interior
/// subset, any edge subset keeping each chosen edge incident to a chosen
/// vertex. Order: edge subset slowest, boundary subset fastest.
pub struct Subhypergraphs<'a> {
    h: &'a Hypergraph,
    masks: Vec<u64>,
    code: u64,
    end: u64,
}

impl<'a> Subhypergraphs<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let bits = h.vertex_count() + h.edge_count();
        assert!(bits < 63, "subhypergraph enumeration needs |V| + |E| < 63");
        Subhypergraphs {
            h,
            masks: h.edge_masks(),
            code: 0,
            end: 1u64 << bits,
        }
    }
}

impl Iterator for Subhypergraphs<'_> {
    type Item = Selector;

    fn next(&mut self) -> Option<Selector> {
        let nv = self.h.vertex_count();
        let nb = self.h.boundary_count();
        while self.code < self.end {
            let code = self.code;
            self.code += 1;
            let vmask = code & ((1u64 << nv) - 1);
            let emask = code >> nv;
            if vmask & ((1u64 << nb) - 1) == 0 {
                continue;
            }
            let orphan = (0..self.masks.len())
                .any(|e| emask >> e & 1 == 1 && self.masks[e] & vmask == 0);
            if orphan {
                continue;
            }
            return Some(Selector {
                boundary: (0..nb).filter(|v| vmask >> v & 1 == 1).collect(),
                interior: (nb..nv).filter(|v| vmask >> v & 1 == 1).collect(),
                edges: (0..self.masks.len()).filter(|e| emask >> e & 1 == 1).collect(),
            });
        }
        None
    }
}

/// Partition of the edge index set; block `k` becomes edge `k` of the
/// coarsening before ids are re-sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgePartition(pub SetPartition);

impl EdgePartition {
    pub fn singletons(h: &Hypergraph) -> Self {
        EdgePartition(SetPartition::singletons(h.edge_count()))
    }

    pub fn describe(&self, h: &Hypergraph) -> String {
        let parts: Vec<String> = self
            .0
            .blocks()
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&e| h.edge_name(e)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        parts.join(" ")
    }
}

/// Partition of the vertex index set with at most one boundary vertex per
/// block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexMergePlan(pub SetPartition);

impl VertexMergePlan {
    pub fn identity(h: &Hypergraph) -> Self {
        VertexMergePlan(SetPartition::singletons(h.vertex_count()))
    }

    pub fn describe(&self, h: &Hypergraph) -> String {
        let parts: Vec<String> = self
            .0
            .blocks()
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&v| h.vertex_name(v)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        parts.join(" ")
    }
}

/// Isomorphism test with boundary vertices pinned by id: looks for a
/// bijection of interior vertices carrying the multiset of edge incidence
/// sets of `a` onto that of `b`. Exact backtracking; meant for small inputs.
pub fn isomorphic_with_boundary(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.edge_count() != b.edge_count()
        || a.interior_count() != b.interior_count()
        || !a.boundary_names().eq(b.boundary_names())
    {
        return false;
    }
    let mut sig_a: Vec<usize> = a.edge_degrees();
    let mut sig_b: Vec<usize> = b.edge_degrees();
    sig_a.sort_unstable();
    sig_b.sort_unstable();
    if sig_a != sig_b {
        return false;
    }
    let deg_a = a.vertex_degrees();
    let deg_b = b.vertex_degrees();
    if a.boundary_indices().any(|v| deg_a[v] != deg_b[v]) {
        return false;
    }
    let nb = a.boundary_count();
    let ni = a.interior_count();
    let mut target: Vec<Vec<usize>> = (0..b.edge_count()).map(|e| b.edge_members(e).to_vec()).collect();
    target.sort();
    // map[v] for interior v of a (offset by nb) is an interior index of b
    let mut map: Vec<usize> = vec![usize::MAX; ni];
    let mut used = vec![false; ni];

    fn rec(
        k: usize,
        a: &Hypergraph,
        deg_a: &[usize],
        deg_b: &[usize],
        nb: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        target: &[Vec<usize>],
    ) -> bool {
        if k == map.len() {
            let mut imgs: Vec<Vec<usize>> = (0..a.edge_count())
                .map(|e| {
                    let mut m: Vec<usize> = a
                        .edge_members(e)
                        .iter()
                        .map(|&v| if v < nb { v } else { map[v - nb] })
                        .collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            imgs.sort();
            return imgs == target;
        }
        for c in 0..map.len() {
            if used[c] || deg_a[nb + k] != deg_b[nb + c] {
                continue;
            }
            used[c] = true;
            map[k] = nb + c;
            if rec(k + 1, a, deg_a, deg_b, nb, map, used, target) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    rec(0, a, &deg_a, &deg_b, nb, &mut map, &mut used, &target)
}
