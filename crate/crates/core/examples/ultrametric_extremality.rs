//! A sum of minimum distances is maximised at a 0/1 ultrametric: compare the
//! partition scan with random ultrametrics and a grid of hierarchies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use usf_lab::ultrametric::{
    evaluate, level_grid, maximize_over_polytope, quarter_levels, sample_audit, Objective,
};

fn main() {
    let f = Objective::parse(
        "points: a b c d\n\
         term 3: a,b c,d\n\
         term -2: a,c\n\
         term 2: b,d a,d\n\
         term -1: b,c\n",
    )
    .unwrap();
    let max = maximize_over_polytope(&f).unwrap();
    let blocks: Vec<String> = max
        .partition
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| f.points[i].as_str()).collect::<Vec<_>>().join(","))
        .collect();
    println!("maximum {} at partition {{{}}}", max.value, blocks.join("} {"));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let audit = sample_audit(&f, &max, 10_000, &mut rng);
    println!("best of {} random ultrametrics: {} (gap {})", audit.samples, audit.best_sample, audit.gap);

    let grid = level_grid(4, &quarter_levels());
    let best = grid.iter().map(|x| evaluate(&f, x)).max().unwrap();
    println!("best of {} grid hierarchies: {best}", grid.len());
}
