//! Reads a hypergraph from the text format, checks it against its JSON form
//! and lists its coarsenings and quotients.

use usf_lab::classify::{classify_ubiquitous, Mode};
use usf_lab::format::{parse_json, parse_text, to_json};
use usf_lab::hypergraph::isomorphic_with_boundary;

fn main() {
    let text = include_str!("data/bowtie.hg");
    let h = parse_text(text).unwrap();
    let json = to_json(&h);
    println!("{json}");
    assert!(isomorphic_with_boundary(&parse_json(&json).unwrap(), &h));

    println!("{} coarsenings", h.edge_partitions().count());
    println!("{} quotients", h.vertex_merge_plans().count());
    println!("{} subhypergraphs", h.subhypergraphs().count());
    for d in 5..=9 {
        let v = classify_ubiquitous(&h, d, Mode::Hypergraph, Some(h.max_edge_degree())).unwrap();
        println!(
            "d = {d}: faithful {}, ubiquitous {:?}, quotient {}",
            v.faithfully_ubiquitous,
            v.ubiquitous,
            v.witness_quotient_text.unwrap_or_else(|| "-".into())
        );
    }
}
