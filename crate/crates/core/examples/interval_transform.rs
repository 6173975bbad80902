//! Predicts the indices of the interval poset from those of the poset, and
//! compares with a direct computation.
//!
//! ```text
//! cargo run --example interval_transform
//! ```

use poset_intervals::flag::{ab_index, cd_index, upsilon};
use poset_intervals::ncpoly::{Alphabet, NcPoly};
use poset_intervals::poset::{generate, graded_interval_poset, second_kind_transform, PosetKind};
use poset_intervals::transforms::Transforms;
use poset_intervals::verify::total_ab_index;

fn main() {
    let mut t = Transforms::new();
    for w in ["a", "b", "ab", "ba", "bb"] {
        let u = NcPoly::word(Alphabet::Ab, w);
        println!("iota({w}) = {}", t.iota(&u).unwrap());
    }

    let p = generate(PosetKind::Boolean, 3).unwrap();
    let ip = graded_interval_poset(&p);
    println!("\nB3 has {} elements, its graded interval poset {}", p.len(), ip.len());
    println!("flag polynomial, direct:    {}", upsilon(&ip).unwrap());
    println!("flag polynomial, predicted: {}", t.iota(&upsilon(&p).unwrap()).unwrap());
    println!("cd-index, direct:    {}", cd_index(&ip).unwrap());
    println!("cd-index, predicted: {}", t.interval_cd(&cd_index(&p).unwrap()).unwrap());

    let psi = ab_index(&p).unwrap();
    println!("\ntotal ab-index of the second-kind transform:");
    println!("  direct:    {}", total_ab_index(&second_kind_transform(&p)));
    println!("  predicted: {}", t.second_kind_ab(&psi).unwrap());
}
