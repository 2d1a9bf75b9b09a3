//! Randomised properties of the exact layers.

use proptest::prelude::*;
use usf_lab::format::{parse_text, to_text};
use usf_lab::hypergraph::isomorphic_with_boundary;
use usf_lab::partition::{bell, set_partitions};
use usf_lab::sim::{loop_erase, spread, spread_greedy, LatticeBox, Point};
use usf_lab::ultrametric::{strong_triangle_violation, subdominant_ultrametric};
use usf_lab::weight::{eta, max_min, min_max, rational};
use usf_lab::{Hypergraph, Rational};

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=5, 0usize..=5).prop_flat_map(|(nv, extra)| {
        let nb = 1..=nv;
        let edges = prop::collection::vec(prop::collection::btree_set(0..nv, 1..=nv), 1..=(1 + extra).min(5));
        (Just(nv), nb, edges).prop_map(|(nv, nb, edges)| {
            let name = |v: usize| format!("v{v}");
            Hypergraph::new(
                (0..nb).map(name),
                (nb..nv).map(name),
                edges.iter().enumerate().map(|(i, m)| (format!("e{i}"), m.iter().map(|&v| name(v)).collect::<Vec<_>>())),
            )
            .unwrap()
        })
    })
}

fn dimension() -> impl Strategy<Value = Rational> {
    (16i64..=160).prop_map(|n| Rational::new(n, 4))
}

fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(0i64..=20, n * (n - 1) / 2).prop_map(move |vals| {
            let mut m = vec![vec![Rational::from_integer(0); n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    m[i][j] = Rational::new(vals[k], 4);
                    m[j][i] = m[i][j];
                    k += 1;
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn min_max_equals_max_min_at_rational_dimensions(h in hypergraph(), d in dimension()) {
        prop_assert_eq!(min_max(&h, d).unwrap().value, max_min(&h, d).unwrap());
    }

    #[test]
    fn min_max_is_below_the_whole_hypergraph_weight_and_at_least_zero(h in hypergraph(), d in dimension()) {
        // a single boundary vertex is a subhypergraph of weight zero, and the
        // identity coarsening bounds the outer minimum
        let v = min_max(&h, d).unwrap().value;
        prop_assert!(v >= rational(0));
        let full: Rational = h.subhypergraphs().map(|s| eta(&h.materialize(&s).unwrap(), d)).max().unwrap();
        prop_assert!(v <= full);
    }

    #[test]
    fn text_format_round_trips(h in hypergraph()) {
        let back = parse_text(&to_text(&h)).unwrap();
        prop_assert!(isomorphic_with_boundary(&back, &h));
        prop_assert_eq!(to_text(&back), to_text(&h));
    }

    #[test]
    fn subdominant_is_the_largest_ultrametric_below(m in symmetric_matrix()) {
        let u = subdominant_ultrametric(&m).unwrap();
        prop_assert!(strong_triangle_violation(&u).is_none());
        let n = m.len();
        for i in 0..n {
            for j in 0..n {
                prop_assert!(u[i][j] <= m[i][j]);
            }
        }
        prop_assert_eq!(subdominant_ultrametric(&u).unwrap(), u.clone());
        // raising any entry breaks the ultrametric or the bound
        for i in 0..n {
            for j in i + 1..n {
                if u[i][j] < m[i][j] {
                    let mut v = u.clone();
                    v[i][j] = m[i][j];
                    v[j][i] = m[i][j];
                    prop_assert!(strong_triangle_violation(&v).is_some());
                }
            }
        }
    }

    #[test]
    fn spread_is_translation_invariant_and_below_greedy(
        pts in prop::collection::vec(prop::collection::vec(-30i64..30, 3), 1..=7),
        shift in prop::collection::vec(-100i64..100, 3),
        rot in 0usize..7,
    ) {
        let s = spread(&pts);
        let moved: Vec<Point> = pts.iter().map(|p| p.iter().zip(&shift).map(|(a, b)| a + b).collect()).collect();
        prop_assert_eq!(&spread(&moved).value, &s.value);
        let n = pts.len();
        let order: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        prop_assert!(spread_greedy(&pts, &order) >= s.value);
    }

    #[test]
    fn loop_erasure_is_simple_and_idempotent(path in prop::collection::vec(0u8..6, 1..40)) {
        let erased = loop_erase(&path);
        prop_assert_eq!(erased.first(), path.first());
        prop_assert_eq!(erased.last(), path.last());
        let mut sorted = erased.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), erased.len());
        prop_assert_eq!(loop_erase(&erased), erased);
    }

    #[test]
    fn box_coordinates_round_trip(d in 1usize..=5, side in 2usize..=7, seed in any::<u64>()) {
        let bx = LatticeBox::new(d, side).unwrap();
        let v = (seed % bx.site_count() as u64) as usize;
        let p = bx.coords(v);
        prop_assert_eq!(bx.index(&p), Some(v));
        prop_assert_eq!(bx.parse_label(&bx.label(v)), Some(v));
        for dir in 0..bx.degree() {
            let u = bx.neighbor(v, dir);
            if !bx.is_wired(u) {
                prop_assert_eq!(bx.distance(u, v), 1);
                prop_assert!((0..bx.degree()).any(|back| bx.neighbor(u, back) == v));
            }
        }
    }
}

#[test]
fn partitions_are_counted_by_bell_numbers() {
    for n in 0..=8 {
        assert_eq!(set_partitions(n).count() as u64, bell(n));
    }
    assert_eq!(bell(10), 115_975);
}
