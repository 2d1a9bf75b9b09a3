//! The five-armed trees `tree-family:d` against the forest criterion. Each
//! line shows where the criterion stops holding, next to the intended `d`.

use usf_lab::catalog::tree_family;
use usf_lab::classify::tree_criterion;
use usf_lab::weight::rational;

fn main() {
    for d in 9..=24 {
        let t = tree_family(d);
        let last = (9..=64i64)
            .take_while(|&k| tree_criterion(&t, rational(k)).unwrap().verdict)
            .last();
        let r = tree_criterion(&t, rational(d as i64)).unwrap();
        println!(
            "d = {d:>2}: |E| = {:>2}, interior = {:>2}, max ratio {} vs threshold {}, last passing d = {}",
            t.edge_count(),
            t.interior_count(),
            r.max_ratio,
            r.threshold,
            last.map_or("none".into(), |k| k.to_string()),
        );
    }
}
