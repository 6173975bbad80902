//! The order complex of the graded interval poset of a Boolean algebra,
//! which is the dual of a type B permutohedron's boundary.
//!
//! ```text
//! cargo run --example type_b_permutohedron
//! ```

use poset_intervals::poset::{generate, graded_interval_poset, is_isomorphic, PosetKind};
use poset_intervals::verify::{reduced_euler_characteristic, type_b_complex};

fn main() {
    for n in 1..=4 {
        let f = type_b_complex(n).f_vector();
        println!("n = {n}: f = {f:?}, reduced Euler characteristic {}", reduced_euler_characteristic(&f));
    }
    for n in 1..=3 {
        let ip = graded_interval_poset(&generate(PosetKind::Boolean, n).unwrap());
        let cube = generate(PosetKind::CubeLattice, n).unwrap();
        println!(
            "intervals of B{n} form the face lattice of the {n}-cube: {}",
            is_isomorphic(ip.poset(), cube.poset()).unwrap()
        );
    }
}
