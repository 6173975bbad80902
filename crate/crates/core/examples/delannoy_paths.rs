//! Weighted lattice paths that produce the mixing of two powers of `c`.
//!
//! ```text
//! cargo run --example delannoy_paths
//! ```

use poset_intervals::ncpoly::{cd_to_ce, Alphabet, NcPoly};
use poset_intervals::transforms::{delannoy_m, delannoy_path_count, mcce_coefficient, Transforms};

fn main() {
    println!("number of weighted paths:");
    for i in 0..=4 {
        let row: Vec<u64> = (0..=4).map(|j| delannoy_path_count(i, j)).collect();
        println!("  {row:?}");
    }

    let mut t = Transforms::new();
    let c = NcPoly::word(Alphabet::Cd, "c");
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let from_paths = delannoy_m(i, j);
        let from_mixing = t.mixing_cd(&c.pow(i), &c.pow(j)).unwrap();
        println!("\nM(c^{i},c^{j}) = {from_paths}");
        println!("  agrees with the recursion: {}", from_paths == from_mixing);
        println!("  in c and e: {}", cd_to_ce(&from_paths).unwrap());
        let coeffs: Vec<String> = (0..=(i + j).div_ceil(2)).map(|r| mcce_coefficient(i, j, r).to_string()).collect();
        println!("  coefficient by number of e-pairs: {coeffs:?}");
    }
}
