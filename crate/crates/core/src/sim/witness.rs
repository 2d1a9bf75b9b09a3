//! Witnesses for the faithful presence of a hypergraph at given components.
//!
//! `ξ` assigns a site to every incidence `(e, v)`. It is a witness when the
//! sites of each edge are pairwise within `⟨··⟩ <= r - 1`, the sites of a
//! boundary vertex lie in its prescribed component, the sites of an interior
//! vertex share a component, and distinct vertices use distinct components.
//! Interior vertices with no edges impose nothing and get no component.

use super::lattice::Point;
use super::spread::spread;
use super::wilson::LatticeForest;
use super::SimError;
use crate::hypergraph::Hypergraph;
use num_bigint::BigUint;
use std::ops::ControlFlow;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    /// `(edge, vertex, site)` for every incidence, by edge then by vertex.
    pub points: Vec<(usize, usize, usize)>,
    /// Component of each hypergraph vertex, `None` for isolated interior
    /// vertices.
    pub components: Vec<Option<usize>>,
}

/// Largest distance allowed inside one edge: `⟨ab⟩ <= r - 1` means
/// `dist(a, b) <= r - 2`. `None` when `r < 2` and nothing qualifies.
pub fn witness_max_distance(r: usize) -> Option<u64> {
    r.checked_sub(2).map(|d| d as u64)
}

struct Search<'a> {
    f: &'a LatticeForest,
    h: &'a Hypergraph,
    comps: Vec<Vec<usize>>,
    max_dist: u64,
    offsets: Vec<Point>,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
    points: Vec<(usize, usize, usize)>,
}

impl Search<'_> {
    fn candidates(&self, e: usize, i: usize) -> Vec<usize> {
        let v = self.h.edge_members(e)[i];
        let bx = self.f.lattice();
        let base: Vec<usize> = if i == 0 {
            match self.assigned[v] {
                Some(c) => self.comps[c].clone(),
                None => (0..bx.site_count()).collect(),
            }
        } else {
            // every later site lies within reach of the edge's first site
            let first = self.points[self.points.len() - i].2;
            let mut b = bx.ball_with(first, &self.offsets);
            b.sort_unstable();
            b
        };
        let placed = &self.points[self.points.len() - i..];
        base.into_iter()
            .filter(|&s| {
                let c = self.f.component_of(s);
                match self.assigned[v] {
                    Some(a) => a == c,
                    None => !self.used[c],
                }
            })
            .filter(|&s| placed.iter().all(|p| bx.distance(p.2, s) <= self.max_dist))
            .collect()
    }

    fn run(&mut self, e: usize, i: usize, visit: &mut dyn FnMut(&Witness) -> ControlFlow<()>) -> ControlFlow<()> {
        if e == self.h.edge_count() {
            return visit(&Witness {
                points: self.points.clone(),
                components: self.assigned.clone(),
            });
        }
        if i == self.h.edge_members(e).len() {
            return self.run(e + 1, 0, visit);
        }
        let v = self.h.edge_members(e)[i];
        for s in self.candidates(e, i) {
            let fresh = self.assigned[v].is_none();
            if fresh {
                let c = self.f.component_of(s);
                self.assigned[v] = Some(c);
                self.used[c] = true;
            }
            self.points.push((e, v, s));
            let flow = self.run(e, i + 1, visit);
            self.points.pop();
            if fresh {
                self.used[self.assigned[v].unwrap()] = false;
                self.assigned[v] = None;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn check_boundary(f: &LatticeForest, h: &Hypergraph, x: &[usize]) -> Result<(), SimError> {
    if x.len() != h.boundary_count() {
        return Err(SimError::BadParameter("one component per boundary vertex expected".into()));
    }
    for (i, &c) in x.iter().enumerate() {
        if c >= f.component_count() {
            return Err(SimError::BadParameter(format!("component {c} does not exist")));
        }
        if x[..i].contains(&c) {
            return Err(SimError::BadParameter("boundary components must be distinct".into()));
        }
    }
    Ok(())
}

/// Calls `visit` on every witness for `h` at the boundary components `x`,
/// in a fixed order, until it breaks.
pub fn for_each_witness(
    f: &LatticeForest,
    h: &Hypergraph,
    x: &[usize],
    r: usize,
    mut visit: impl FnMut(&Witness) -> ControlFlow<()>,
) -> Result<(), SimError> {
    check_boundary(f, h, x)?;
    let Some(max_dist) = witness_max_distance(r) else {
        return Ok(());
    };
    let mut assigned = vec![None; h.vertex_count()];
    let mut used = vec![false; f.component_count()];
    for (v, &c) in x.iter().enumerate() {
        assigned[v] = Some(c);
        used[c] = true;
    }
    let mut s = Search {
        f,
        h,
        comps: f.components(),
        max_dist,
        offsets: f.lattice().ball_offsets(max_dist as usize),
        assigned,
        used,
        points: Vec::new(),
    };
    let _ = s.run(0, 0, &mut visit);
    Ok(())
}

/// Up to `limit` witnesses.
pub fn witness_search(
    f: &LatticeForest,
    h: &Hypergraph,
    x: &[usize],
    r: usize,
    limit: usize,
) -> Result<Vec<Witness>, SimError> {
    let mut out = Vec::new();
    for_each_witness(f, h, x, r, |w| {
        if out.len() == limit {
            return ControlFlow::Break(());
        }
        out.push(w.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of witnesses, stopping at `limit`. The flag is true when the
/// limit was reached.
pub fn count_witnesses(
    f: &LatticeForest,
    h: &Hypergraph,
    x: &[usize],
    r: usize,
    limit: u64,
) -> Result<(u64, bool), SimError> {
    let mut n = 0u64;
    for_each_witness(f, h, x, r, |_| {
        if n == limit {
            return ControlFlow::Break(());
        }
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok((n, n == limit))
}

/// Witnesses by trying every site for every incidence. Only for checking
/// the windowed search on small boxes.
pub fn witness_search_exhaustive(
    f: &LatticeForest,
    h: &Hypergraph,
    x: &[usize],
    r: usize,
) -> Result<Vec<Witness>, SimError> {
    check_boundary(f, h, x)?;
    let Some(max_dist) = witness_max_distance(r) else {
        return Ok(Vec::new());
    };
    let bx = f.lattice();
    let slots: Vec<(usize, usize)> = (0..h.edge_count())
        .flat_map(|e| h.edge_members(e).iter().map(move |&v| (e, v)))
        .collect();
    let n = bx.site_count();
    let mut out = Vec::new();
    let mut sites = vec![0usize; slots.len()];
    loop {
        let mut comp: Vec<Option<usize>> = vec![None; h.vertex_count()];
        for (v, &c) in x.iter().enumerate() {
            comp[v] = Some(c);
        }
        let mut ok = true;
        for (k, &(e, v)) in slots.iter().enumerate() {
            let c = f.component_of(sites[k]);
            match comp[v] {
                Some(a) if a != c => ok = false,
                Some(_) => {}
                None => comp[v] = Some(c),
            }
            for (j, &(e2, _)) in slots[..k].iter().enumerate() {
                if e2 == e && bx.distance(sites[j], sites[k]) > max_dist {
                    ok = false;
                }
            }
        }
        let named: Vec<usize> = comp.iter().flatten().copied().collect();
        let distinct = named.iter().enumerate().all(|(i, c)| !named[..i].contains(c));
        if ok && distinct {
            out.push(Witness {
                points: slots.iter().zip(&sites).map(|(&(e, v), &s)| (e, v, s)).collect(),
                components: comp,
            });
        }
        // odometer
        let mut k = slots.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            sites[k] += 1;
            if sites[k] < n {
                break;
            }
            sites[k] = 0;
        }
    }
}

/// `W_α(x, ξ) = ∏_{u ∈ ∂V} ⟨x_u, {ξ_e : e ⊥ u}⟩^{-(d-2α)}
/// ∏_{u ∈ V∘} ⟨{ξ_e : e ⊥ u}⟩^{-(d-2α)}`, one point `ξ_e` per edge.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessWeight {
    pub exponent: i64,
    /// Spread of each vertex's factor, by vertex index.
    pub spreads: Vec<BigUint>,
    pub log2: f64,
}

pub fn witness_weight(h: &Hypergraph, x: &[Point], xi: &[Point], d: i64, alpha: i64) -> Result<WitnessWeight, SimError> {
    if x.len() != h.boundary_count() || xi.len() != h.edge_count() {
        return Err(SimError::BadParameter("one point per boundary vertex and per edge expected".into()));
    }
    let exponent = d - 2 * alpha;
    let mut spreads = Vec::with_capacity(h.vertex_count());
    let mut total = 0.0;
    for u in 0..h.vertex_count() {
        let mut set: Vec<Point> = Vec::new();
        if h.is_boundary(u) {
            set.push(x[u].clone());
        }
        set.extend((0..h.edge_count()).filter(|&e| h.incident(u, e)).map(|e| xi[e].clone()));
        let s = spread(&set);
        total += s.log2;
        spreads.push(s.value);
    }
    Ok(WitnessWeight {
        exponent,
        spreads,
        log2: -(exponent as f64) * total,
    })
}
