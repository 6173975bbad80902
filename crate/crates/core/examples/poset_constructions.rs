//! Builds the standard families, the interval posets and the second-kind
//! transform, and checks the product laws on a small pair.
//!
//! ```text
//! cargo run --example poset_constructions
//! ```

use poset_intervals::poset::{
    diamond_product, direct_product, generate, graded_interval_poset, interval_poset,
    is_isomorphic_with_cap, second_kind_transform, Poset, PosetKind,
};

fn main() {
    for kind in PosetKind::ALL {
        let sizes: Vec<usize> = (1..=3).map(|n| generate(kind, n).unwrap().len()).collect();
        println!("{:>14}: sizes {sizes:?}", kind.name());
    }

    // A poset with no bottom or top still has an interval poset.
    let p = Poset::new(&["u1", "u2", "u3", "u4"], &[("u1", "u2"), ("u2", "u3"), ("u1", "u4")]).unwrap();
    let ip = interval_poset(&p);
    println!("\nintervals of a 4-element tree: {} elements", ip.len());
    for i in 0..ip.len() {
        let up: Vec<&str> = ip.upper_covers(i).iter().map(|&j| ip.label(j)).collect();
        println!("  {:<10} covered by {up:?}", ip.label(i));
    }

    let b2 = generate(PosetKind::Boolean, 2).unwrap();
    let l1 = generate(PosetKind::Ladder, 1).unwrap();
    let lhs = graded_interval_poset(&direct_product(&b2, &l1));
    let rhs = diamond_product(&graded_interval_poset(&b2), &graded_interval_poset(&l1));
    println!(
        "\ngraded intervals of B2 x L1: {} elements, diamond of the factors: {} elements, isomorphic: {}",
        lhs.len(),
        rhs.len(),
        is_isomorphic_with_cap(lhs.poset(), rhs.poset(), 128).unwrap()
    );

    let b3 = generate(PosetKind::Boolean, 3).unwrap();
    println!("\nsecond-kind transform of B3:");
    for m in second_kind_transform(&b3).iter() {
        println!("  {:<8} rank {} with {} elements", m.generator, m.poset.rank(), m.poset.len());
    }
}
