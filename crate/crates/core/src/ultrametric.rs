//! Sums of minimum distances over the ultrametric polytope.
//!
//! An objective is `F(x) = Σ c_k · min{x(a,b) : (a,b) ∈ W_k}` over bounded
//! ultrametrics `x` with values in `[0, 1]`. Its maximum is attained at a
//! point whose distances are all 0 or 1, and such points are exactly the set
//! partitions of the index set (distance 0 inside a block, 1 across). So the
//! maximum is found by scanning partitions.

use crate::partition::{set_partitions, SetPartition};
use crate::Rational;
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest index set accepted by the partition scans. Bell(10) = 115975.
pub const DEFAULT_POINT_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UltrametricError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("x({0},{0}) is not zero")]
    NonzeroDiagonal(usize),
    #[error("x({0},{1}) differs from x({1},{0})")]
    NotSymmetric(usize, usize),
    #[error("x({0},{1}) is outside [0, 1]")]
    OutOfRange(usize, usize),
    #[error("x({0},{1}) exceeds max(x({0},{2}), x({2},{1}))")]
    StrongTriangle(usize, usize, usize),
    #[error("x({0},{1}) is negative")]
    Negative(usize, usize),
    #[error("{n} points exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("term support refers to index {0}, outside the point set")]
    BadSupport(usize),
    #[error("term {0} has an empty support")]
    EmptySupport(usize),
    #[error("blocks do not partition the point set")]
    BadBlocks,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A symmetric matrix of rationals with zero diagonal.
pub type DistanceMatrix = Vec<Vec<Rational>>;

/// A bounded ultrametric on `{0, .., n-1}`: zero diagonal, symmetric,
/// values in `[0, 1]`, and `x(a,b) <= max(x(a,c), x(c,b))`. Distinct points
/// may be at distance zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrametricPoint {
    values: DistanceMatrix,
}

fn check_symmetric(m: &DistanceMatrix) -> Result<(), UltrametricError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(UltrametricError::NotSquare);
    }
    for a in 0..n {
        if !m[a][a].is_zero() {
            return Err(UltrametricError::NonzeroDiagonal(a));
        }
        for b in 0..n {
            if m[a][b] != m[b][a] {
                return Err(UltrametricError::NotSymmetric(a, b));
            }
            if m[a][b] < Rational::zero() {
                return Err(UltrametricError::Negative(a, b));
            }
        }
    }
    Ok(())
}

/// First violation of the strong triangle inequality, if any.
pub fn strong_triangle_violation(m: &DistanceMatrix) -> Option<(usize, usize, usize)> {
    let n = m.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m[a][b] > m[a][c].max(m[c][b]) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

impl UltrametricPoint {
    pub fn new(values: DistanceMatrix) -> Result<Self, UltrametricError> {
        check_symmetric(&values)?;
        let n = values.len();
        for a in 0..n {
            for b in 0..n {
                if values[a][b] > Rational::one() {
                    return Err(UltrametricError::OutOfRange(a, b));
                }
            }
        }
        if let Some((a, b, c)) = strong_triangle_violation(&values) {
            return Err(UltrametricError::StrongTriangle(a, b, c));
        }
        Ok(UltrametricPoint { values })
    }

    /// The 0/1 point of a partition.
    pub fn from_partition(p: &SetPartition) -> Self {
        let labels = p.labels();
        let n = labels.len();
        let values = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if labels[a] == labels[b] {
                            Rational::zero()
                        } else {
                            Rational::one()
                        }
                    })
                    .collect()
            })
            .collect();
        UltrametricPoint { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, a: usize, b: usize) -> Rational {
        self.values[a][b]
    }

    pub fn values(&self) -> &DistanceMatrix {
        &self.values
    }

    /// `λ·x` for `0 ≤ λ ≤ 1/max(x)`.
    pub fn scaled(&self, lambda: Rational) -> Result<Self, UltrametricError> {
        UltrametricPoint::new(
            self.values
                .iter()
                .map(|row| row.iter().map(|&v| v * lambda).collect())
                .collect(),
        )
    }
}

/// One term `c · min over support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: Rational,
    pub support: Vec<(usize, usize)>,
}

/// `F(x) = Σ c_k · min{x(a,b) : (a,b) ∈ W_k}` over named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Objective {
    pub points: Vec<String>,
    pub terms: Vec<Term>,
}

impl Objective {
    pub fn new(points: Vec<String>, terms: Vec<Term>) -> Result<Self, UltrametricError> {
        for (k, t) in terms.iter().enumerate() {
            if t.support.is_empty() {
                return Err(UltrametricError::EmptySupport(k));
            }
            for &(a, b) in &t.support {
                if a >= points.len() || b >= points.len() {
                    return Err(UltrametricError::BadSupport(a.max(b)));
                }
            }
        }
        Ok(Objective { points, terms })
    }

    /// Parses
    ///
    /// ```text
    /// points: a b c
    /// term 2: a,b b,c
    /// term -3/2: a,c
    /// ```
    pub fn parse(text: &str) -> Result<Self, UltrametricError> {
        let err = |line: usize, message: String| UltrametricError::Parse { line, message };
        let mut points: Option<Vec<String>> = None;
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut terms = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = content
                .split_once(':')
                .ok_or_else(|| err(line, "expected `<keyword>: ...`".into()))?;
            let mut words = head.split_whitespace();
            match (words.next(), words.next(), words.next()) {
                (Some("points"), None, _) => {
                    let ps: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    for (k, p) in ps.iter().enumerate() {
                        if index.insert(p.clone(), k).is_some() {
                            return Err(err(line, format!("duplicate point `{p}`")));
                        }
                    }
                    points = Some(ps);
                }
                (Some("term"), Some(c), None) => {
                    if points.is_none() {
                        return Err(err(line, "`points` must come first".into()));
                    }
                    let coef: Rational = c
                        .parse()
                        .map_err(|_| err(line, format!("bad coefficient `{c}`")))?;
                    let mut support = Vec::new();
                    for pair in rest.split_whitespace() {
                        let (a, b) = pair
                            .split_once(',')
                            .ok_or_else(|| err(line, format!("expected `a,b`, got `{pair}`")))?;
                        let ia = *index
                            .get(a)
                            .ok_or_else(|| err(line, format!("unknown point `{a}`")))?;
                        let ib = *index
                            .get(b)
                            .ok_or_else(|| err(line, format!("unknown point `{b}`")))?;
                        support.push((ia, ib));
                    }
                    if support.is_empty() {
                        return Err(err(line, "term with empty support".into()));
                    }
                    terms.push(Term { coef, support });
                }
                _ => return Err(err(line, format!("unknown directive `{head}`"))),
            }
        }
        let points = points.ok_or_else(|| err(0, "missing `points` line".into()))?;
        Objective::new(points, terms)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("points: {}\n", self.points.join(" "));
        for t in &self.terms {
            let pairs: Vec<String> = t
                .support
                .iter()
                .map(|&(a, b)| format!("{},{}", self.points[a], self.points[b]))
                .collect();
            out.push_str(&format!("term {}: {}\n", t.coef, pairs.join(" ")));
        }
        out
    }

    /// Value at the 0/1 point of a partition given by block labels: a term
    /// counts when no pair of its support lies inside one block.
    fn value_at_labels(&self, labels: &[usize]) -> Rational {
        self.terms
            .iter()
            .filter(|t| t.support.iter().all(|&(a, b)| labels[a] != labels[b]))
            .map(|t| t.coef)
            .sum()
    }
}

pub fn evaluate(f: &Objective, x: &UltrametricPoint) -> Rational {
    f.terms
        .iter()
        .map(|t| {
            let m = t
                .support
                .iter()
                .map(|&(a, b)| x.get(a, b))
                .min()
                .expect("nonempty support");
            t.coef * m
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeMax {
    pub value: Rational,
    pub partition: SetPartition,
}

impl PolytopeMax {
    pub fn point(&self) -> UltrametricPoint {
        UltrametricPoint::from_partition(&self.partition)
    }
}

fn scan<I: Iterator<Item = SetPartition>>(f: &Objective, parts: I) -> PolytopeMax {
    let mut best: Option<PolytopeMax> = None;
    for p in parts {
        let v = f.value_at_labels(&p.labels());
        let better = match &best {
            None => true,
            Some(b) => {
                v > b.value
                    || (v == b.value && p.block_count() > b.partition.block_count())
                    || (v == b.value && p.block_count() == b.partition.block_count() && p < b.partition)
            }
        };
        if better {
            best = Some(PolytopeMax {
                value: v,
                partition: p,
            });
        }
    }
    best.expect("at least one partition")
}

/// Maximum of `f` over the ultrametric polytope, by scanning partitions.
/// Ties go to the finer partition, then to the lexicographically least.
pub fn maximize_over_polytope(f: &Objective) -> Result<PolytopeMax, UltrametricError> {
    maximize_over_polytope_with_cap(f, DEFAULT_POINT_CAP)
}

pub fn maximize_over_polytope_with_cap(f: &Objective, cap: usize) -> Result<PolytopeMax, UltrametricError> {
    let n = f.points.len();
    if n > cap {
        return Err(UltrametricError::TooLarge { n, cap });
    }
    Ok(scan(f, set_partitions(n)))
}

/// Same maximum over ultrametrics that put distance 1 between points of
/// different blocks: candidate partitions refine `blocks`.
pub fn maximize_blockwise(f: &Objective, blocks: &SetPartition) -> Result<PolytopeMax, UltrametricError> {
    let n = f.points.len();
    if n > DEFAULT_POINT_CAP {
        return Err(UltrametricError::TooLarge {
            n,
            cap: DEFAULT_POINT_CAP,
        });
    }
    if blocks.len() != n {
        return Err(UltrametricError::BadBlocks);
    }
    Ok(scan(f, set_partitions(n).filter(|p| p.refines(blocks))))
}

/// The largest ultrametric below `l`: `l̂(a,b)` is the least over chains
/// from `a` to `b` of the largest step. Computed as the bottleneck of the
/// path between `a` and `b` in a minimum spanning tree of `l`.
pub fn subdominant_ultrametric(l: &DistanceMatrix) -> Result<DistanceMatrix, UltrametricError> {
    check_symmetric(l)?;
    let n = l.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    if n == 0 {
        return Ok(out);
    }
    // Prim
    let mut in_tree = vec![false; n];
    let mut best: Vec<Option<(Rational, usize)>> = vec![None; n];
    let mut adj: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
    in_tree[0] = true;
    for v in 1..n {
        best[v] = Some((l[0][v], 0));
    }
    for _ in 1..n {
        let v = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| best[a].unwrap().0.cmp(&best[b].unwrap().0).then(a.cmp(&b)))
            .expect("vertex outside the tree");
        let (w, u) = best[v].unwrap();
        in_tree[v] = true;
        adj[u].push((v, w));
        adj[v].push((u, w));
        for x in 0..n {
            if !in_tree[x] && best[x].map_or(true, |(bw, _)| l[v][x] < bw) {
                best[x] = Some((l[v][x], v));
            }
        }
    }
    // bottleneck from every source
    for s in 0..n {
        let mut stack = vec![(s, usize::MAX, Rational::zero())];
        while let Some((v, from, m)) = stack.pop() {
            out[s][v] = m;
            for &(x, w) in &adj[v] {
                if x != from {
                    stack.push((x, v, m.max(w)));
                }
            }
        }
    }
    Ok(out)
}

/// A random ultrametric from a random hierarchy. A cluster below height `h`
/// gets a height drawn uniformly from `{0, 1/1000, .., h}`, then splits into
/// at least two random sub-clusters; points in different sub-clusters sit at
/// that height. The root's ceiling is 1.
pub fn random_ultrametric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UltrametricPoint {
    let mut values = vec![vec![Rational::zero(); n]; n];
    fn split<R: Rng + ?Sized>(items: Vec<usize>, ceiling: i64, rng: &mut R, values: &mut DistanceMatrix) {
        if items.len() < 2 {
            return;
        }
        let h = rng.random_range(0..=ceiling);
        let k = rng.random_range(2..=items.len());
        let mut groups: Vec<Vec<usize>>;
        loop {
            groups = vec![Vec::new(); k];
            for &i in &items {
                groups[rng.random_range(0..k)].push(i);
            }
            if groups.iter().filter(|g| !g.is_empty()).count() >= 2 {
                break;
            }
        }
        let height = Rational::new(h, 1000);
        for (gi, g) in groups.iter().enumerate() {
            for (gj, g2) in groups.iter().enumerate() {
                if gi != gj {
                    for &a in g {
                        for &b in g2 {
                            values[a][b] = height;
                        }
                    }
                }
            }
        }
        for g in groups {
            split(g, h, rng, values);
        }
    }
    split((0..n).collect(), 1000, rng, &mut values);
    UltrametricPoint { values }
}

/// Every ultrametric on `n` points whose values lie in `levels` (sorted,
/// starting at 0): one per chain of coarsening partitions, the `i`-th
/// partition grouping points at distance at most `levels[i]`.
pub fn level_grid(n: usize, levels: &[Rational]) -> Vec<UltrametricPoint> {
    assert!(!levels.is_empty() && levels[0].is_zero());
    let parts: Vec<SetPartition> = set_partitions(n).collect();
    let mut out = Vec::new();
    // chain[i] is the partition at threshold levels[i]; the top level
    // joins everything, so chains run over levels[..len-1]
    fn rec(
        i: usize,
        chain: &mut Vec<SetPartition>,
        parts: &[SetPartition],
        levels: &[Rational],
        n: usize,
        out: &mut Vec<UltrametricPoint>,
    ) {
        if i + 1 == levels.len() {
            let mut values = vec![vec![Rational::zero(); n]; n];
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let k = chain
                        .iter()
                        .position(|p| p.block_of(a) == p.block_of(b))
                        .unwrap_or(levels.len() - 1);
                    values[a][b] = levels[k];
                }
            }
            out.push(UltrametricPoint { values });
            return;
        }
        for p in parts {
            if chain.last().map_or(true, |prev| prev.refines(p)) {
                chain.push(p.clone());
                rec(i + 1, chain, parts, levels, n, out);
                chain.pop();
            }
        }
    }
    rec(0, &mut Vec::new(), &parts, levels, n, &mut out);
    out
}

/// The quarter-step levels `{0, 1/4, 1/2, 3/4, 1}`.
pub fn quarter_levels() -> Vec<Rational> {
    (0..=4).map(|k| Rational::new(k, 4)).collect()
}

/// Random objective on `n` points with `terms` terms, integer coefficients
/// in `-5..=5` and supports of one to three off-diagonal pairs.
pub fn random_objective<R: Rng + ?Sized>(n: usize, terms: usize, rng: &mut R) -> Objective {
    assert!(n >= 2);
    let points = (0..n).map(|i| format!("p{i}")).collect();
    let terms = (0..terms)
        .map(|_| {
            let k = rng.random_range(1..=3);
            let support = (0..k)
                .map(|_| {
                    let a = rng.random_range(0..n);
                    let mut b = rng.random_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    (a, b)
                })
                .collect();
            Term {
                coef: Rational::from_integer(rng.random_range(-5..=5)),
                support,
            }
        })
        .collect();
    Objective { points, terms }
}

/// Result of checking the partition maximum against random samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleAudit {
    pub samples: usize,
    pub best_sample: Rational,
    /// `maximum - best_sample`; never negative.
    pub gap: Rational,
}

pub fn sample_audit<R: Rng + ?Sized>(f: &Objective, max: &PolytopeMax, samples: usize, rng: &mut R) -> SampleAudit {
    let n = f.points.len();
    let best = (0..samples)
        .map(|_| evaluate(f, &random_ultrametric(n, rng)))
        .max()
        .unwrap_or_else(Rational::zero);
    SampleAudit {
        samples,
        best_sample: best,
        gap: max.value - best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use num_traits::Signed;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn abc() -> Vec<String> {
        vec!["a".into(), "b".into(), "c".into()]
    }

    #[test]
    fn evaluate_examples() {
        let ones = UltrametricPoint::from_partition(&SetPartition::singletons(3));
        let f = Objective::new(abc(), vec![Term { coef: r(2), support: vec![(0, 1)] }]).unwrap();
        assert_eq!(evaluate(&f, &ones), r(2));
        let zero = UltrametricPoint::from_partition(&SetPartition::single_block(3));
        let g = Objective::new(
            abc(),
            vec![Term { coef: r(7), support: vec![(0, 0)] }, Term { coef: r(1), support: vec![(0, 2)] }],
        )
        .unwrap();
        assert_eq!(evaluate(&g, &zero), r(0));
        let h = Objective::new(
            abc(),
            vec![
                Term { coef: r(1), support: vec![(0, 1)] },
                Term { coef: r(-3), support: vec![(0, 1), (1, 2)] },
            ],
        )
        .unwrap();
        let ab_c = SetPartition::from_blocks(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(evaluate(&h, &UltrametricPoint::from_partition(&ab_c)), r(0));
    }

    #[test]
    fn validation() {
        let bad = vec![
            vec![r(0), r(1), Rational::new(1, 2)],
            vec![r(1), r(0), Rational::new(1, 2)],
            vec![Rational::new(1, 2), Rational::new(1, 2), r(0)],
        ];
        assert!(matches!(UltrametricPoint::new(bad), Err(UltrametricError::StrongTriangle(..))));
        let asym = vec![vec![r(0), r(1)], vec![r(0), r(0)]];
        assert!(matches!(UltrametricPoint::new(asym), Err(UltrametricError::NotSymmetric(..))));
        let big = vec![vec![r(0), r(2)], vec![r(2), r(0)]];
        assert!(matches!(UltrametricPoint::new(big), Err(UltrametricError::OutOfRange(..))));
    }

    #[test]
    fn nonnegative_coefficients_peak_at_singletons() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let mut f = random_objective(5, 6, &mut rng);
            for t in &mut f.terms {
                t.coef = t.coef.abs() + 1;
            }
            let m = maximize_over_polytope(&f).unwrap();
            assert!(m.partition.is_singletons());
        }
    }

    #[test]
    fn negative_single_term() {
        let f = Objective::new(abc(), vec![Term { coef: r(-1), support: vec![(0, 1)] }]).unwrap();
        let m = maximize_over_polytope(&f).unwrap();
        assert_eq!(m.value, r(0));
        assert_eq!(m.partition.block_of(0), m.partition.block_of(1));
    }

    #[test]
    fn polytope_max_dominates_samples_and_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let grid = level_grid(4, &quarter_levels());
        for _ in 0..5 {
            let f = random_objective(4, 5, &mut rng);
            let m = maximize_over_polytope(&f).unwrap();
            assert_eq!(evaluate(&f, &m.point()), m.value);
            for _ in 0..500 {
                assert!(evaluate(&f, &random_ultrametric(4, &mut rng)) <= m.value);
            }
            for x in &grid {
                assert!(evaluate(&f, x) <= m.value);
            }
        }
    }

    #[test]
    fn grid_points_are_ultrametrics() {
        let grid = level_grid(4, &quarter_levels());
        // chains of four partitions of a 4-set, each refining the next
        let parts: Vec<SetPartition> = set_partitions(4).collect();
        let mut chains = 0;
        for a in &parts {
            for b in parts.iter().filter(|b| a.refines(b)) {
                for c in parts.iter().filter(|c| b.refines(c)) {
                    chains += parts.iter().filter(|d| c.refines(d)).count();
                }
            }
        }
        assert_eq!(grid.len(), chains);
        for x in &grid {
            assert!(UltrametricPoint::new(x.values().clone()).is_ok());
        }
    }

    #[test]
    fn random_samples_are_ultrametrics() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 0..7 {
            for _ in 0..50 {
                let x = random_ultrametric(n, &mut rng);
                assert!(UltrametricPoint::new(x.values().clone()).is_ok());
            }
        }
    }

    #[test]
    fn blockwise_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let f = random_objective(4, 5, &mut rng);
            assert_eq!(
                maximize_blockwise(&f, &SetPartition::single_block(4)).unwrap(),
                maximize_over_polytope(&f).unwrap()
            );
            let forced = maximize_blockwise(&f, &SetPartition::singletons(4)).unwrap();
            assert!(forced.partition.is_singletons());
            let ones = UltrametricPoint::from_partition(&SetPartition::singletons(4));
            assert_eq!(forced.value, evaluate(&f, &ones));
            let two = SetPartition::from_blocks(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
            let oracle = set_partitions(4)
                .filter(|p| p.refines(&two))
                .map(|p| evaluate(&f, &UltrametricPoint::from_partition(&p)))
                .max()
                .unwrap();
            assert_eq!(maximize_blockwise(&f, &two).unwrap().value, oracle);
        }
    }

    #[test]
    fn subdominant_examples() {
        let l = vec![vec![r(0), r(5), r(9)], vec![r(5), r(0), r(2)], vec![r(9), r(2), r(0)]];
        let u = subdominant_ultrametric(&l).unwrap();
        assert_eq!(u[0][2], r(5));
        assert_eq!(u[1][2], r(2));
        let fixed = UltrametricPoint::from_partition(&SetPartition::from_blocks(3, vec![vec![0], vec![1, 2]]).unwrap());
        assert_eq!(&subdominant_ultrametric(fixed.values()).unwrap(), fixed.values());
    }

    // every chain between a and b, by brute force over simple paths
    fn chain_oracle(l: &DistanceMatrix) -> DistanceMatrix {
        let n = l.len();
        let mut out = vec![vec![Rational::zero(); n]; n];
        fn walk(v: usize, t: usize, seen: &mut Vec<bool>, cur: Rational, best: &mut Option<Rational>, l: &DistanceMatrix) {
            if v == t {
                if best.map_or(true, |b| cur < b) {
                    *best = Some(cur);
                }
                return;
            }
            for x in 0..l.len() {
                if !seen[x] {
                    seen[x] = true;
                    walk(x, t, seen, cur.max(l[v][x]), best, l);
                    seen[x] = false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    let mut seen = vec![false; n];
                    seen[a] = true;
                    let mut best = None;
                    walk(a, b, &mut seen, Rational::zero(), &mut best, l);
                    out[a][b] = best.unwrap();
                }
            }
        }
        out
    }

    #[test]
    fn subdominant_matches_chain_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=6 {
            for _ in 0..30 {
                let mut l = vec![vec![Rational::zero(); n]; n];
                for a in 0..n {
                    for b in a + 1..n {
                        let v = Rational::from_integer(rng.random_range(0..10));
                        l[a][b] = v;
                        l[b][a] = v;
                    }
                }
                let u = subdominant_ultrametric(&l).unwrap();
                assert_eq!(u, chain_oracle(&l));
                assert!(strong_triangle_violation(&u).is_none());
                for a in 0..n {
                    for b in 0..n {
                        assert!(u[a][b] <= l[a][b]);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let text = "points: a b c\nterm 2: a,b b,c\nterm -3/2: a,c # note\n";
        let f = Objective::parse(text).unwrap();
        assert_eq!(f.terms[1].coef, Rational::new(-3, 2));
        assert_eq!(Objective::parse(&f.to_text()).unwrap(), f);
        assert!(matches!(
            Objective::parse("points: a\nterm 1: a,z\n"),
            Err(UltrametricError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let points: Vec<String> = (0..11).map(|i| format!("p{i}")).collect();
        let f = Objective::new(points, vec![]).unwrap();
        assert!(matches!(maximize_over_polytope(&f), Err(UltrametricError::TooLarge { .. })));
    }
}
