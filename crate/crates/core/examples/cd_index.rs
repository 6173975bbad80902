//! Flag f-vectors and the ab-, cd- and ce-indices of a few graded posets.
//!
//! ```text
//! cargo run --example cd_index
//! ```

use poset_intervals::flag::{ab_index, cd_index, ce_index, flag_f_vector};
use poset_intervals::poset::{generate, PosetKind};

fn main() {
    let b3 = generate(PosetKind::Boolean, 3).unwrap();
    let f = flag_f_vector(&b3).unwrap();
    println!("flag f-vector of B3:");
    for (s, count) in f.entries() {
        println!("  S = {s:?}: {count}");
    }
    println!("ab-index: {}", ab_index(&b3).unwrap());

    for (kind, n) in [
        (PosetKind::Boolean, 3),
        (PosetKind::Boolean, 4),
        (PosetKind::Ladder, 3),
        (PosetKind::CubeLattice, 3),
        (PosetKind::CrosspolytopeLattice, 3),
    ] {
        let p = generate(kind, n).unwrap();
        println!(
            "{}-{n}: cd = {}   ce = {}",
            kind.name(),
            cd_index(&p).unwrap(),
            ce_index(&p).unwrap()
        );
    }

    // Chains of rank 2 or more are not Eulerian.
    let chain = generate(PosetKind::Chain, 2).unwrap();
    println!("chain-2: {}", cd_index(&chain).unwrap_err());
}
