//! Samples a wired spanning forest of a small planar box and draws it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use usf_lab::sim::{wilson_wired, LatticeBox};

fn main() {
    let side = 12;
    let bx = LatticeBox::new(2, side).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = wilson_wired(&bx, &[], &mut rng);
    println!("{} components", f.component_count());
    let glyph = |c: usize| (b'a' + (c % 26) as u8) as char;
    for y in (0..side as i64).rev() {
        let row: String = (0..side as i64)
            .map(|x| glyph(f.component_of(bx.index(&[x, y]).unwrap())))
            .collect();
        println!("{row}");
    }
    let sizes: Vec<usize> = f.components().iter().map(Vec::len).collect();
    println!("sizes {sizes:?}");
}
