//! Witnesses for a two-edge path between two components of a sampled
//! forest, and the weight of the first one found.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use usf_lab::catalog::path;
use usf_lab::sim::{component_graph, count_witnesses, wilson_wired, witness_search, witness_weight, LatticeBox};

fn main() {
    let bx = LatticeBox::new(3, 8).unwrap();
    let f = wilson_wired(&bx, &[], &mut ChaCha8Rng::seed_from_u64(2));
    let h = path(2);
    let r = 4;
    let g = component_graph(&f, r);
    println!("{} components, {} component-graph edges at r = {r}", f.component_count(), g.edges().len());

    let (a, b) = (f.component_of(0), f.component_of(bx.site_count() - 1));
    if a == b {
        println!("corners share a component; try another seed");
        return;
    }
    let (n, capped) = count_witnesses(&f, &h, &[a, b], r, 100_000).unwrap();
    println!("witnesses for path:2 at components ({a}, {b}): {n}{}", if capped { "+" } else { "" });
    if let Some(w) = witness_search(&f, &h, &[a, b], r, 1).unwrap().first() {
        let x = vec![bx.coords(0), bx.coords(bx.site_count() - 1)];
        // one representative point per edge: its first incidence
        let xi: Vec<_> = (0..h.edge_count())
            .map(|e| bx.coords(w.points.iter().find(|p| p.0 == e).unwrap().2))
            .collect();
        let wt = witness_weight(&h, &x, &xi, 5, 2).unwrap();
        println!("first witness {:?}", w.points);
        println!("weight 2^{:.2} with spreads {:?}", wt.log2, wt.spreads);
    }
}
