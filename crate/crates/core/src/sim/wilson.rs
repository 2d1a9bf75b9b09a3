use super::lattice::LatticeBox;
use super::SimError;
use rand::Rng;
use std::collections::HashMap;
use std::hash::Hash;

/// Chronological loop erasure: `τ_0 = 0`, `τ_{i+1} = 1 + max{t ≥ τ_i :
/// γ_t = γ_{τ_i}}`, keeping `γ_{τ_0}, γ_{τ_1}, ..` until the path ends.
pub fn loop_erase<T: Clone + Eq + Hash>(path: &[T]) -> Vec<T> {
    let mut last: HashMap<&T, usize> = HashMap::with_capacity(path.len());
    for (t, v) in path.iter().enumerate() {
        last.insert(v, t);
    }
    let mut out = Vec::new();
    let mut tau = 0;
    while tau < path.len() {
        out.push(path[tau].clone());
        tau = last[&path[tau]] + 1;
    }
    out
}

/// Simple random walk from `start` until the first vertex where `stop`
/// holds, inclusive.
pub fn random_walk_until<R: Rng + ?Sized>(
    bx: &LatticeBox,
    start: usize,
    stop: impl Fn(usize) -> bool,
    rng: &mut R,
) -> Vec<usize> {
    let deg = bx.degree();
    let mut path = vec![start];
    let mut cur = start;
    while !stop(cur) {
        cur = bx.neighbor(cur, rng.random_range(0..deg));
        path.push(cur);
    }
    path
}

/// Loop-erased walk from `start` to the first `stop` vertex, using the
/// last-exit pointer trick. Consumes the RNG exactly as
/// [`random_walk_until`] does.
pub fn loop_erased_walk<R: Rng + ?Sized>(
    bx: &LatticeBox,
    start: usize,
    stop: impl Fn(usize) -> bool,
    next: &mut [u8],
    rng: &mut R,
) -> Vec<usize> {
    let deg = bx.degree();
    let mut cur = start;
    while !stop(cur) {
        let dir = rng.random_range(0..deg);
        next[cur] = dir as u8;
        cur = bx.neighbor(cur, dir);
    }
    let mut path = vec![start];
    let mut cur = start;
    while !stop(cur) {
        cur = bx.neighbor(cur, next[cur] as usize);
        path.push(cur);
    }
    path
}

const NO_PARENT: u8 = u8::MAX;

/// A spanning tree of the wired box, seen as a forest on the sites.
#[derive(Clone, Debug)]
pub struct LatticeForest {
    bx: LatticeBox,
    parent: Vec<u8>,
    component: Vec<u32>,
    component_count: usize,
}

impl LatticeForest {
    /// Builds a forest from the step direction of each site towards the
    /// wired vertex.
    pub fn from_parents(bx: LatticeBox, parent: Vec<u8>) -> Result<Self, SimError> {
        if parent.len() != bx.site_count() {
            return Err(SimError::InvalidForest("one direction per site expected".into()));
        }
        if let Some(v) = parent.iter().position(|&p| p as usize >= bx.degree()) {
            return Err(SimError::InvalidForest(format!("site {} has no parent", bx.label(v))));
        }
        let component = label_components(&bx, &parent)?;
        let component_count = component.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Ok(LatticeForest {
            bx,
            parent,
            component,
            component_count,
        })
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.bx
    }

    pub fn parent_dir(&self, v: usize) -> usize {
        self.parent[v] as usize
    }

    pub fn parent_dirs(&self) -> &[u8] {
        &self.parent
    }

    pub fn parent(&self, v: usize) -> usize {
        self.bx.neighbor(v, self.parent[v] as usize)
    }

    /// Component of a site after deleting the wired vertex. Components are
    /// numbered in order of their smallest site.
    pub fn component_of(&self, v: usize) -> usize {
        self.component[v] as usize
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for v in 0..self.bx.site_count() {
            out[self.component[v] as usize].push(v);
        }
        out
    }

    /// Rechecks that parents lead every site to the wired vertex and that
    /// components are the connected pieces of the site edges.
    pub fn validate(&self) -> Result<(), SimError> {
        let c = label_components(&self.bx, &self.parent)?;
        if c != self.component {
            return Err(SimError::InvalidForest("component labels are stale".into()));
        }
        for v in 0..self.bx.site_count() {
            let p = self.parent(v);
            if !self.bx.is_wired(p) && self.component[p] != self.component[v] {
                return Err(SimError::InvalidForest("edge joins two components".into()));
            }
        }
        Ok(())
    }

    /// Edges `child parent`, one per line, with coordinates comma-joined and
    /// `W` for the wired vertex.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.bx.site_count() {
            out.push_str(&self.bx.label(v));
            out.push(' ');
            out.push_str(&self.bx.label(self.parent(v)));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`edge_list`](Self::edge_list).
    pub fn parse_edge_list(bx: LatticeBox, text: &str) -> Result<Self, SimError> {
        let mut parent = vec![NO_PARENT; bx.site_count()];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || SimError::InvalidForest(format!("line {}: bad edge `{line}`", i + 1));
            let (a, b) = line.split_once(' ').ok_or_else(bad)?;
            let u = bx.parse_label(a).filter(|&u| !bx.is_wired(u)).ok_or_else(bad)?;
            let w = bx.parse_label(b.trim()).ok_or_else(bad)?;
            let dir = (0..bx.degree()).find(|&dir| bx.neighbor(u, dir) == w).ok_or_else(bad)?;
            parent[u] = dir as u8;
        }
        LatticeForest::from_parents(bx, parent)
    }
}

fn label_components(bx: &LatticeBox, parent: &[u8]) -> Result<Vec<u32>, SimError> {
    const UNSEEN: u32 = u32::MAX;
    const ON_STACK: u32 = u32::MAX - 1;
    let n = bx.site_count();
    // root[v]: the site below the wired vertex on v's branch
    let mut root = vec![UNSEEN; n];
    let mut stack = Vec::new();
    for s in 0..n {
        let mut v = s;
        while root[v] == UNSEEN {
            root[v] = ON_STACK;
            stack.push(v);
            let p = bx.neighbor(v, parent[v] as usize);
            if bx.is_wired(p) {
                root[v] = v as u32;
                stack.pop();
                break;
            }
            v = p;
        }
        if root[v] == ON_STACK {
            return Err(SimError::InvalidForest(format!("cycle through {}", bx.label(v))));
        }
        let r = root[v];
        for u in stack.drain(..) {
            root[u] = r;
        }
    }
    let mut id = vec![UNSEEN; n];
    let mut next = 0u32;
    let mut out = vec![0u32; n];
    for v in 0..n {
        let r = root[v] as usize;
        if id[r] == UNSEEN {
            id[r] = next;
            next += 1;
        }
        out[v] = id[r];
    }
    Ok(out)
}

/// Wilson's algorithm rooted at the wired vertex: walks start from `order`
/// in turn (then from any sites it missed, by index) and their loop
/// erasures are added to the tree.
pub fn wilson_wired<R: Rng + ?Sized>(bx: &LatticeBox, order: &[usize], rng: &mut R) -> LatticeForest {
    let n = bx.site_count();
    let deg = bx.degree();
    let mut in_tree = vec![false; n + 1];
    in_tree[n] = true;
    let mut next = vec![NO_PARENT; n];
    for start in order.iter().copied().chain(0..n) {
        if in_tree[start] {
            continue;
        }
        let mut cur = start;
        while !in_tree[cur] {
            let dir = rng.random_range(0..deg);
            next[cur] = dir as u8;
            cur = bx.neighbor(cur, dir);
        }
        let mut cur = start;
        while !in_tree[cur] {
            in_tree[cur] = true;
            cur = bx.neighbor(cur, next[cur] as usize);
        }
    }
    LatticeForest::from_parents(bx.clone(), next).expect("Wilson output is a spanning tree")
}

/// Runs Wilson's algorithm only from a few sites. The branches found are
/// distributed as in a full sample, so two sites share a component exactly
/// when their labels agree.
pub struct PartialWilson {
    bx: LatticeBox,
    stamp: Vec<u32>,
    generation: u32,
    next: Vec<u8>,
    label: Vec<u32>,
}

impl PartialWilson {
    pub fn new(bx: LatticeBox) -> Self {
        let n = bx.site_count();
        PartialWilson {
            bx,
            stamp: vec![0; n],
            generation: 0,
            next: vec![0; n],
            label: vec![0; n],
        }
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.bx
    }

    /// Component labels of `sites` in a fresh sample; labels start at 1.
    pub fn labels<R: Rng + ?Sized>(&mut self, sites: &[usize], rng: &mut R) -> Vec<u32> {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        let g = self.generation;
        let wired = self.bx.wired();
        let deg = self.bx.degree();
        let mut fresh = 0u32;
        let mut out = Vec::with_capacity(sites.len());
        for &start in sites {
            if self.stamp[start] != g {
                let mut cur = start;
                while cur != wired && self.stamp[cur] != g {
                    let dir = rng.random_range(0..deg);
                    self.next[cur] = dir as u8;
                    cur = self.bx.neighbor(cur, dir);
                }
                let end = cur;
                let lab = if end == wired {
                    fresh += 1;
                    fresh
                } else {
                    self.label[end]
                };
                let mut cur = start;
                while cur != end {
                    self.stamp[cur] = g;
                    self.label[cur] = lab;
                    cur = self.bx.neighbor(cur, self.next[cur] as usize);
                }
            }
            out.push(self.label[start]);
        }
        out
    }
}
