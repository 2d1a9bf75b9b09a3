use super::lattice::{bracket, Point};
use num_bigint::BigUint;
use num_traits::One;

/// `⟨K⟩ = min over trees τ on K of ∏_{xy ∈ τ} ⟨xy⟩`, with a tree attaining
/// it.
#[derive(Clone, Debug, PartialEq)]
pub struct SpreadResult {
    pub value: BigUint,
    pub log2: f64,
    /// Index pairs into `K`.
    pub tree: Vec<(usize, usize)>,
}

/// Exact spread by Prim's algorithm. A product is minimised by the same
/// trees as a sum of logarithms, and both are minimised by any minimum
/// spanning tree of the brackets.
pub fn spread(points: &[Point]) -> SpreadResult {
    let n = points.len();
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    if n > 1 {
        let mut in_tree = vec![false; n];
        let mut best: Vec<(u64, usize)> = (0..n).map(|v| (bracket(&points[0], &points[v]), 0)).collect();
        in_tree[0] = true;
        for _ in 1..n {
            let v = (0..n)
                .filter(|&v| !in_tree[v])
                .min_by_key(|&v| (best[v].0, v))
                .expect("a point outside the tree");
            in_tree[v] = true;
            tree.push((best[v].1, v));
            for u in 0..n {
                let b = bracket(&points[v], &points[u]);
                if !in_tree[u] && b < best[u].0 {
                    best[u] = (b, v);
                }
            }
        }
    }
    let value = tree_product(points, &tree);
    let log2 = tree.iter().map(|&(a, b)| (bracket(&points[a], &points[b]) as f64).log2()).sum();
    SpreadResult { value, log2, tree }
}

/// `∏ ⟨xy⟩` over the pairs of `tree`.
pub fn tree_product(points: &[Point], tree: &[(usize, usize)]) -> BigUint {
    tree.iter()
        .fold(BigUint::one(), |acc, &(a, b)| acc * bracket(&points[a], &points[b]))
}

/// `∏_{i ≥ 1} min_{j < i} ⟨x_{o_i} x_{o_j}⟩` for the enumeration `order`.
/// This is the product of a spanning tree, so it is at least the spread.
pub fn spread_greedy(points: &[Point], order: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..order.len() {
        let m = (0..i)
            .map(|j| bracket(&points[order[i]], &points[order[j]]))
            .min()
            .expect("earlier point");
        acc *= m;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sets() {
        assert_eq!(spread(&[]).value, BigUint::one());
        assert_eq!(spread(&[vec![3, 4]]).value, BigUint::one());
        let r = spread(&[vec![0, 0], vec![2, 3]]);
        assert_eq!(r.value, BigUint::from(6u32));
        assert_eq!(r.tree, vec![(0, 1)]);
        assert!((r.log2 - 6f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn collinear_points_chain() {
        let pts = vec![vec![0], vec![10], vec![3]];
        let r = spread(&pts);
        // 0-3 and 3-10
        assert_eq!(r.value, BigUint::from(4u32 * 8));
        assert_eq!(tree_product(&pts, &r.tree), r.value);
        assert_eq!(spread_greedy(&pts, &[0, 1, 2]), BigUint::from(11u32 * 4));
        assert_eq!(spread_greedy(&pts, &[0, 2, 1]), r.value);
    }

    #[test]
    fn large_values_do_not_overflow() {
        let pts: Vec<Point> = (0..40).map(|i| vec![i * 1_000_000_000]).collect();
        let r = spread(&pts);
        assert_eq!(r.value, BigUint::from(1_000_000_001u64).pow(39));
        assert!((r.log2 - 39.0 * (1_000_000_001f64).log2()).abs() < 1e-6);
    }
}
