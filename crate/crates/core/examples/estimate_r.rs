//! Smallest diameter seen to meet two and three distinct components.

use usf_lab::sim::{estimate_r, EstimateConfig, LatticeBox, SimError};

fn main() {
    let bx = LatticeBox::new(5, 12).unwrap();
    for m in [2, 3, 4] {
        match estimate_r(&bx, m, 4, EstimateConfig { samples: 8, seed: 1 }) {
            Ok(r) => println!("m = {m}: threshold {} from {} samples, frequencies {:?}", r.threshold, r.samples, r.frequencies),
            Err(SimError::InconclusiveAtCap { r_max, .. }) => println!("m = {m}: nothing up to r = {r_max}"),
            Err(e) => panic!("{e}"),
        }
    }
}
