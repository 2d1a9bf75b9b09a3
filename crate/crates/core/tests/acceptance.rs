//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.
//!
//!   1. min-max = max-min on random small hypergraphs
//!   2. paths are faithful exactly up to d = 4n + 4
//!   3. the separating tree family
//!   4. verdicts in dimensions 5 to 8
//!   5. graphs with one boundary vertex
//!   6. tree criterion against the general classifier
//!   7. min-max is monotone in d
//!   8. partition scan dominates sampled ultrametrics
//!   9. Wilson sampler is uniform on tiny boxes
//!  10. spread against all spanning trees
//!  11. connection probability decays with separation
//!  12. two components meet at diameter 1

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};
use usf_lab::catalog;
use usf_lab::classify::{classify_faithful, tree_criterion, Mode};
use usf_lab::sim::{
    bracket, estimate_connection, estimate_r, spread, spread_greedy, tree_product, EstimateConfig, LatticeBox,
    LatticeForest, Point,
};
use usf_lab::sim::estimate::{sample_forests, separated_pair};
use usf_lab::ultrametric::{
    evaluate, level_grid, maximize_over_polytope, quarter_levels, random_objective, random_ultrametric,
};
use usf_lab::weight::{max_min, min_max, min_max_exhaustive, rational, MaxMinTable};
use usf_lab::{Hypergraph, Rational};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > budget {
        out.ok = false;
    }
    out.detail = format!("{}; {:.2}s of {}s", out.detail, took.as_secs_f64(), budget.as_secs());
    out
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

// hypergraphs with 1..=6 vertices, 1..=5 edges, parallel edges allowed
fn random_hypergraph(rng: &mut ChaCha8Rng) -> Hypergraph {
    let nv = rng.random_range(1..=6);
    let nb = rng.random_range(1..=nv);
    let ne = rng.random_range(1..=5);
    let names: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, Vec<String>)> = (0..ne)
        .map(|e| {
            let mut members: Vec<String> = names.iter().filter(|_| rng.random_bool(0.4)).cloned().collect();
            if members.is_empty() {
                members.push(names[rng.random_range(0..nv)].clone());
            }
            (format!("e{e}"), members)
        })
        .collect();
    Hypergraph::new(names[..nb].to_vec(), names[nb..].to_vec(), edges).unwrap()
}

fn duality_corpus() -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241);
    (0..500).map(|_| random_hypergraph(&mut rng)).collect()
}

fn c1_duality() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (i, h) in duality_corpus().iter().enumerate() {
        let table = MaxMinTable::new(h).unwrap();
        for d in 4..=20 {
            let d = rational(d);
            let mm = min_max(h, d).unwrap().value;
            let dual = table.evaluate(d).0;
            // the plain double loop is an independent reference
            let plain = if i % 5 == 0 { min_max_exhaustive(h, d).unwrap().value } else { mm };
            if mm != dual || mm != plain || dual != max_min(h, d).unwrap() {
                bad.push((i, d));
            }
            checked += 1;
        }
    }
    outcome(bad.is_empty(), format!("{checked} (h, d) pairs, {} mismatches {:?}", bad.len(), bad.iter().take(5).collect::<Vec<_>>()))
}

fn c2_paths() -> Outcome {
    let mut bad = Vec::new();
    let mut faithful = BTreeMap::new();
    for n in 1..=10usize {
        for d in 5..=48i64 {
            let v = classify_faithful(&catalog::path(n), d, Mode::Graph).unwrap().faithfully_ubiquitous;
            if v != (d <= 4 * n as i64 + 4) {
                bad.push((n, d));
            }
            faithful.insert((n, d), v);
        }
    }
    // shortest faithful path in dimension d has ceil((d-4)/4) edges
    for d in 5..=44i64 {
        let shortest = (1..=10usize).find(|&n| faithful[&(n, d)]);
        let expect = ((d - 4 + 3) / 4).max(1) as usize;
        if shortest != Some(expect) {
            bad.push((0, d));
        }
    }
    outcome(bad.is_empty(), format!("440 verdicts, mismatches {bad:?}"))
}

fn c3_separating_family() -> Outcome {
    let mut counts_ok = true;
    let mut failing = Vec::new();
    for d in 9..=20usize {
        let t = catalog::tree_family(d);
        counts_ok &= t.interior_count() == d - 8 && t.edge_count() == d - 4;
        let at = classify_faithful(&t, d as i64, Mode::Graph).unwrap().faithfully_ubiquitous;
        let above = classify_faithful(&t, d as i64 + 1, Mode::Graph).unwrap().faithfully_ubiquitous;
        if !at || above {
            failing.push(d);
        }
    }
    outcome(
        counts_ok && failing.is_empty(),
        format!("counts {}; verdict wrong for d in {failing:?}", if counts_ok { "exact" } else { "wrong" }),
    )
}

fn c4_low_dimensions() -> Outcome {
    let cases = [
        ("edge:5", vec![5]),
        ("edge:3", vec![5, 6]),
        ("three-pairs", vec![5, 6, 7]),
    ];
    let mut bad = Vec::new();
    for (name, expect) in &cases {
        let h = catalog::builtin(name).unwrap();
        let got: Vec<i64> = (5..=8)
            .filter(|&d| classify_faithful(&h, d, Mode::Hypergraph).unwrap().faithfully_ubiquitous)
            .collect();
        if &got != expect {
            bad.push(format!("{name}: {got:?}"));
        }
    }
    outcome(bad.is_empty(), format!("3 hypergraphs over d = 5..8, wrong {bad:?}"))
}

fn random_connected_graph(rng: &mut ChaCha8Rng) -> Hypergraph {
    let nv = rng.random_range(1..=7usize);
    let mut pairs = BTreeSet::new();
    for v in 1..nv {
        pairs.insert((rng.random_range(0..v), v));
    }
    let target = rng.random_range(pairs.len()..=6).max(pairs.len());
    let mut tries = 0;
    while pairs.len() < target && tries < 100 && nv > 2 {
        let a = rng.random_range(0..nv);
        let b = rng.random_range(0..nv);
        if a != b {
            pairs.insert((a.min(b), a.max(b)));
        }
        tries += 1;
    }
    let name = |v: usize| format!("v{v}");
    Hypergraph::new(
        vec![name(0)],
        (1..nv).map(name),
        pairs.iter().enumerate().map(|(i, &(a, b))| (format!("e{i}"), vec![name(a), name(b)])),
    )
    .unwrap()
}

fn c5_degenerate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    let mut sizes = BTreeSet::new();
    for i in 0..100 {
        let h = random_connected_graph(&mut rng);
        sizes.insert(h.edge_count());
        for d in 5..=30 {
            if !classify_faithful(&h, d, Mode::Graph).unwrap().faithfully_ubiquitous {
                bad.push((i, d));
            }
        }
    }
    outcome(bad.is_empty(), format!("100 graphs, edge counts {sizes:?}, failures {:?}", bad.iter().take(5).collect::<Vec<_>>()))
}

// canonical AHU code of a tree rooted at r
fn ahu(adj: &[Vec<usize>], r: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[r].iter().filter(|&&c| c != parent).map(|&c| ahu(adj, c, r)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn prufer_trees(n: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    if n == 1 {
        visit(&[]);
        return;
    }
    if n == 2 {
        visit(&[(0, 1)]);
        return;
    }
    let total = n.pow(n as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        visit(&edges);
    }
}

fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeMap::new();
    prufer_trees(n, |edges| {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let code = (0..n).map(|r| ahu(&adj, r, usize::MAX)).min().unwrap();
        seen.entry(code).or_insert_with(|| edges.to_vec());
    });
    seen.into_values().collect()
}

fn c6_tree_consistency() -> Outcome {
    let mut shapes = 0;
    let mut labelings = 0;
    let mut bad = Vec::new();
    for n in 2..=8 {
        for edges in unlabeled_trees(n) {
            shapes += 1;
            let mut deg = vec![0; n];
            for &(a, b) in &edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
            for mask in 1u32..(1 << leaves.len()) {
                let boundary: Vec<usize> = (0..leaves.len()).filter(|i| mask >> i & 1 == 1).map(|i| leaves[i]).collect();
                let name = |v: usize| format!("v{v}");
                let t = Hypergraph::new(
                    boundary.iter().map(|&v| name(v)),
                    (0..n).filter(|v| !boundary.contains(v)).map(name),
                    edges.iter().enumerate().map(|(i, &(a, b))| (format!("e{i}"), vec![name(a), name(b)])),
                )
                .unwrap();
                labelings += 1;
                for d in 9..=20 {
                    let tc = tree_criterion(&t, rational(d)).unwrap().verdict;
                    let cf = classify_faithful(&t, d, Mode::Graph).unwrap().faithfully_ubiquitous;
                    if tc != cf {
                        bad.push((edges.clone(), boundary.clone(), d));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty() && shapes == 47,
        format!("{shapes} tree shapes, {labelings} labelings, {} disagreements", bad.len()),
    )
}

fn c7_monotone() -> Outcome {
    let mut bad = 0;
    for h in duality_corpus() {
        let values: Vec<Rational> = (4..=30).map(|d| min_max(&h, rational(d)).unwrap().value).collect();
        if values.windows(2).any(|w| w[1] < w[0]) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("500 hypergraphs over d = 4..30, {bad} not monotone"))
}

fn c8_ultrametric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let grid = level_grid(4, &quarter_levels());
    let mut bad = Vec::new();
    let mut tight = 0;
    for i in 0..50 {
        let terms = rng.random_range(1..=6);
        let f = random_objective(4, terms, &mut rng);
        let max = maximize_over_polytope(&f).unwrap();
        let point = max.point();
        let zero_one = point.values().iter().flatten().all(|v| *v == rational(0) || *v == rational(1));
        if !zero_one || evaluate(&f, &point) != max.value {
            bad.push(i);
            continue;
        }
        let mut best = None;
        for _ in 0..10_000 {
            let v = evaluate(&f, &random_ultrametric(4, &mut rng));
            best = best.max(Some(v));
        }
        let grid_best = grid.iter().map(|x| evaluate(&f, x)).max().unwrap();
        if best.unwrap() > max.value || grid_best > max.value {
            bad.push(i);
        }
        if grid_best == max.value {
            tight += 1;
        }
    }
    outcome(
        bad.is_empty() && tight == 50,
        format!("50 objectives, {} grid points, grid attains the max {tight}/50, violations {bad:?}", grid.len()),
    )
}

// spanning trees of the wired box rooted at W, one parent direction per site
fn all_trees(bx: &LatticeBox) -> Vec<Vec<u8>> {
    let n = bx.site_count();
    let deg = bx.degree();
    let mut out = Vec::new();
    let mut dirs = vec![0u8; n];
    loop {
        if LatticeForest::from_parents(bx.clone(), dirs.clone()).is_ok() {
            out.push(dirs.clone());
        }
        let mut i = 0;
        while i < n {
            dirs[i] += 1;
            if (dirs[i] as usize) < deg {
                break;
            }
            dirs[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

// Kirchhoff: determinant of the Laplacian with the wired vertex removed
fn matrix_tree_count(bx: &LatticeBox) -> u64 {
    let n = bx.site_count();
    let mut m = vec![vec![0f64; n]; n];
    for v in 0..n {
        for dir in 0..bx.degree() {
            m[v][v] += 1.0;
            let u = bx.neighbor(v, dir);
            if !bx.is_wired(u) {
                m[v][u] -= 1.0;
            }
        }
    }
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).unwrap();
        m.swap(c, p);
        if p != c {
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let k = m[r][c] / m[c][c];
            for j in c..n {
                m[r][j] -= k * m[c][j];
            }
        }
    }
    det.round() as u64
}

fn chi_square_uniform(bx: &LatticeBox, samples: usize, seed: u64) -> (usize, u64, f64) {
    let trees = all_trees(bx);
    let kirchhoff = matrix_tree_count(bx);
    let index: BTreeMap<Vec<u8>, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut counts = vec![0usize; trees.len()];
    for key in sample_forests(bx, EstimateConfig { samples, seed }, |f| f.parent_dirs().to_vec()) {
        counts[index[&key]] += 1;
    }
    let expected = samples as f64 / trees.len() as f64;
    let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let dist = ChiSquared::new((trees.len() - 1) as f64).unwrap();
    (trees.len(), kirchhoff, 1.0 - dist.cdf(stat))
}

fn c9_uniformity() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (d, side, expect) in [(1, 3, 4), (2, 2, 192)] {
        let bx = LatticeBox::new(d, side).unwrap();
        let (trees, kirchhoff, p) = chi_square_uniform(&bx, 100_000, 9);
        ok &= trees == expect && kirchhoff == expect as u64 && p > 0.001;
        parts.push(format!("d={d} L={side}: {trees} trees (Kirchhoff {kirchhoff}), p = {p:.4}"));
    }
    outcome(ok, parts.join(", "))
}

fn c10_spread() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = 0;
    for _ in 0..200 {
        let k = rng.random_range(1..=6);
        let mut pts: Vec<Point> = Vec::new();
        while pts.len() < k {
            let p: Point = (0..3).map(|_| rng.random_range(0..20)).collect();
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let mut brute: Option<BigUint> = None;
        prufer_trees(k, |edges| {
            let v = tree_product(&pts, edges);
            if brute.as_ref().map_or(true, |b| v < *b) {
                brute = Some(v);
            }
        });
        let s = spread(&pts);
        let mut ok = Some(&s.value) == brute.as_ref() && tree_product(&pts, &s.tree) == s.value;
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..k).collect();
            order.shuffle(&mut rng);
            ok &= spread_greedy(&pts, &order) >= s.value;
        }
        // single pair sanity against the bracket itself
        if k == 2 {
            ok &= s.value == BigUint::from(bracket(&pts[0], &pts[1]));
        }
        if !ok {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("200 point sets, {bad} mismatches"))
}

fn c11_decay() -> Outcome {
    let bx = LatticeBox::new(5, 16).unwrap();
    let cfg = EstimateConfig { samples: 20_000, seed: 11 };
    let seps = [2usize, 4, 8];
    let ps: Vec<f64> = seps
        .iter()
        .map(|&s| estimate_connection(&bx, &separated_pair(&bx, s).unwrap(), cfg).unwrap().p)
        .collect();
    let decreasing = ps.windows(2).all(|w| w[1] < w[0]);
    let xs: Vec<f64> = seps.iter().map(|&s| (s as f64).ln()).collect();
    let ys: Vec<f64> = ps.iter().map(|p| p.ln()).collect();
    let mx = xs.iter().sum::<f64>() / 3.0;
    let my = ys.iter().sum::<f64>() / 3.0;
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    outcome(
        decreasing && (-2.0..=-0.3).contains(&slope),
        format!("p = {ps:.4?} at s = {seps:?}, slope {slope:.3} (allowed [-2.0, -0.3])"),
    )
}

fn c12_r_estimate() -> Outcome {
    let bx = LatticeBox::new(5, 12).unwrap();
    let got: Vec<Option<usize>> = (1..=3)
        .map(|seed| estimate_r(&bx, 2, 4, EstimateConfig { samples: 10, seed }).ok().map(|r| r.threshold))
        .collect();
    outcome(got.iter().all(|&t| t == Some(1)), format!("thresholds for seeds 1, 2, 3: {got:?}"))
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("duality", secs(120), c1_duality),
        ("path diameter", secs(10), c2_paths),
        ("separating family", secs(60), c3_separating_family),
        ("dimensions 5-8", secs(5), c4_low_dimensions),
        ("degenerate graphs", secs(60), c5_degenerate),
        ("tree criterion", secs(300), c6_tree_consistency),
        ("monotonicity", secs(120), c7_monotone),
        ("ultrametric extremality", secs(120), c8_ultrametric),
        ("wilson uniformity", secs(60), c9_uniformity),
        ("spread exactness", secs(60), c10_spread),
        ("connection decay", secs(1800), c11_decay),
        ("r estimate", secs(300), c12_r_estimate),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let out = timed(budget, f);
        println!("{} criterion {:>2} {name}: {}", if out.ok { "PASS" } else { "FAIL" }, i + 1, out.detail);
        if !out.ok {
            failed += 1;
        }
    }
    println!("{failed} of 12 criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
