//! The min-max value of `three-pairs` across dimensions, with the optimal
//! coarsening and the heaviest subhypergraph that attain it.

use usf_lab::catalog::three_pairs;
use usf_lab::weight::{max_min, min_max, rational};

fn main() {
    let h = three_pairs();
    print!("{h}");
    for d in 4..=10 {
        let d = rational(d);
        let sol = min_max(&h, d).unwrap();
        // the dual problem gives the same number
        assert_eq!(sol.value, max_min(&h, d).unwrap());
        println!(
            "d = {d:>2}: min-max {:>4}  coarsening {}  subhypergraph {}",
            sol.value.to_string(),
            sol.witness_coarsening.describe(&h),
            sol.witness_subhypergraph.describe(&sol.coarsening),
        );
    }
}
