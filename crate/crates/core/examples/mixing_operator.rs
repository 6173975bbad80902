//! The ab-index of a direct product from the indices of the factors.
//!
//! ```text
//! cargo run --example mixing_operator
//! ```

use poset_intervals::flag::{ab_index, cd_index};
use poset_intervals::ncpoly::{Alphabet, NcPoly};
use poset_intervals::poset::{direct_product, generate, PosetKind};
use poset_intervals::transforms::Transforms;

fn main() {
    let mut t = Transforms::new();
    let one = NcPoly::one(Alphabet::Cd);
    let c = NcPoly::word(Alphabet::Cd, "c");
    println!("M(1,1) = {}", t.mixing_cd(&one, &one).unwrap());
    println!("M(1,c) = {}", t.mixing_cd(&one, &c).unwrap());
    println!("M(c,c) = {}", t.mixing_cd(&c, &c).unwrap());

    let p = generate(PosetKind::Boolean, 2).unwrap();
    let q = generate(PosetKind::Ladder, 2).unwrap();
    let prod = direct_product(&p, &q);
    println!("\nB2 x L2 has {} elements", prod.len());
    println!("  ab-index, direct: {}", ab_index(&prod).unwrap());
    println!(
        "  from the factors: {}",
        t.mixing_def(&ab_index(&p).unwrap(), &ab_index(&q).unwrap()).unwrap()
    );
    println!("  cd-index, direct: {}", cd_index(&prod).unwrap());
    println!(
        "  from the factors: {}",
        t.mixing_cd(&cd_index(&p).unwrap(), &cd_index(&q).unwrap()).unwrap()
    );

    let x = NcPoly::parse(Alphabet::Cd, "c^2+d").unwrap();
    println!("\npyramid of c^2+d: {}", t.pyr(&x).unwrap());
}
