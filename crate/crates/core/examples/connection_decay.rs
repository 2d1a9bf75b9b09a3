//! Probability that two points share a component in a 5-dimensional box,
//! at growing separations, with 95% intervals and the fitted log-log slope.
//!
//! cargo run --release --example connection_decay

use usf_lab::sim::estimate::separated_pair;
use usf_lab::sim::{estimate_connection, EstimateConfig, LatticeBox};

fn main() {
    let bx = LatticeBox::new(5, 16).unwrap();
    let cfg = EstimateConfig { samples: 20_000, seed: 11 };
    let mut logs = Vec::new();
    for s in [1usize, 2, 4, 8] {
        let k = separated_pair(&bx, s).unwrap();
        let e = estimate_connection(&bx, &k, cfg).unwrap();
        println!("s = {s}: p = {:.4}  [{:.4}, {:.4}]", e.p, e.ci_low, e.ci_high);
        if s > 1 {
            logs.push(((s as f64).ln(), e.p.ln()));
        }
    }
    let n = logs.len() as f64;
    let mx = logs.iter().map(|l| l.0).sum::<f64>() / n;
    let my = logs.iter().map(|l| l.1).sum::<f64>() / n;
    let slope = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / logs.iter().map(|(x, _)| (x - mx).powi(2)).sum::<f64>();
    println!("slope over s = 2, 4, 8: {slope:.3}");
}
