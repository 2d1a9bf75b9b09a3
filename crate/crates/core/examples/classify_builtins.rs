//! Critical dimensions of the builtin hypergraphs.
//!
//! cargo run --example classify_builtins

use usf_lab::catalog::builtin_examples;
use usf_lab::classify::{critical_dimensions, Mode};

fn main() {
    for (name, h) in builtin_examples() {
        let mode = if h.max_edge_degree() > 2 { Mode::Hypergraph } else { Mode::Graph };
        let cap = (mode == Mode::Hypergraph).then(|| h.max_edge_degree());
        let c = critical_dimensions(&h, mode, 5, 40, cap).expect("builtins classify");
        let show = |x: Option<i64>| x.map_or("none".to_string(), |d| d.to_string());
        println!(
            "{name:<16} {mode:<10} last faithful d = {:<5} last ubiquitous d = {}",
            show(c.faithful),
            show(c.ubiquitous)
        );
    }
}
