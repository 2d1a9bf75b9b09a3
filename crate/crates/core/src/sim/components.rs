use super::lattice::LatticeBox;
use super::wilson::LatticeForest;
use std::collections::{BTreeSet, VecDeque};

/// Components of a forest, adjacent when some box path of length at most
/// `r` joins them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGraph {
    pub r: usize,
    pub adjacency: Vec<BTreeSet<usize>>,
}

impl ComponentGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nb) in self.adjacency.iter().enumerate() {
            out.extend(nb.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }
}

/// Breadth-first search from all sites of each component at once, cut off
/// at depth `r`.
pub fn component_graph(f: &LatticeForest, r: usize) -> ComponentGraph {
    let bx = f.lattice();
    let comps = f.components();
    let mut adjacency = vec![BTreeSet::new(); comps.len()];
    let mut depth = vec![usize::MAX; bx.site_count()];
    let mut touched = Vec::new();
    for (k, sites) in comps.iter().enumerate() {
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &v in sites {
            depth[v] = 0;
            touched.push(v);
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            let c = f.component_of(v);
            if c != k {
                adjacency[k].insert(c);
                adjacency[c].insert(k);
            }
            if depth[v] == r {
                continue;
            }
            for u in bx.site_neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    touched.push(u);
                    queue.push_back(u);
                }
            }
        }
        for v in touched.drain(..) {
            depth[v] = usize::MAX;
        }
    }
    ComponentGraph { r, adjacency }
}

// Extends `chosen` by sites of new components, pairwise within `r`, drawn
// from `cands`. `visit` sees the component set of each extension and returns
// true to stop.
fn extend_cliques(
    bx: &LatticeBox,
    f: &LatticeForest,
    r: u64,
    max_size: usize,
    cands: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == max_size {
        return false;
    }
    for i in from..cands.len() {
        let w = cands[i];
        let cw = f.component_of(w);
        if chosen.iter().any(|&c| f.component_of(c) == cw) {
            continue;
        }
        if chosen.iter().any(|&c| bx.distance(c, w) > r) {
            continue;
        }
        chosen.push(w);
        let comps: Vec<usize> = chosen.iter().map(|&c| f.component_of(c)).collect();
        if visit(&comps) || extend_cliques(bx, f, r, max_size, cands, i + 1, chosen, visit) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

// Calls `visit` with the component set of every set of at most `max_size`
// sites in distinct components with pairwise distance at most `r`, anchored
// at its smallest site.
fn scan_diameter_sets(f: &LatticeForest, r: usize, max_size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let bx = f.lattice();
    let offsets = bx.ball_offsets(r);
    for v in 0..bx.site_count() {
        if visit(&[f.component_of(v)]) {
            return;
        }
        let cv = f.component_of(v);
        let mut cands: Vec<usize> = bx
            .ball_with(v, &offsets)
            .into_iter()
            .filter(|&w| w > v && f.component_of(w) != cv)
            .collect();
        cands.sort_unstable();
        let mut chosen = vec![v];
        if extend_cliques(bx, f, r as u64, max_size, &cands, 0, &mut chosen, visit) {
            return;
        }
    }
}

/// Every set of at most `max_degree` components that a single set of
/// diameter at most `r` meets, as sorted component lists.
pub fn component_hyperedges(f: &LatticeForest, r: usize, max_degree: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    scan_diameter_sets(f, r, max_degree, &mut |comps| {
        let mut c = comps.to_vec();
        c.sort_unstable();
        out.insert(c);
        false
    });
    out
}

/// Whether a set of diameter at most `r` meets `m` distinct components.
pub fn meets_components(f: &LatticeForest, r: usize, m: usize) -> bool {
    if m <= 1 {
        return f.lattice().site_count() > 0;
    }
    let mut found = false;
    scan_diameter_sets(f, r, m, &mut |comps| {
        found = comps.len() >= m;
        found
    });
    found
}
