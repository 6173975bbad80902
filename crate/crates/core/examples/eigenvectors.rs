//! Eigenvectors of the second-kind operator: Boolean algebras, the kernel in
//! each degree, and what the pyramid and lift operators do to eigenvectors.
//!
//! ```text
//! cargo run --release --example eigenvectors
//! ```

use poset_intervals::flag::ab_index;
use poset_intervals::poset::{generate, PosetKind};
use poset_intervals::transforms::{eigen_experiments, Transforms};

fn main() {
    let mut t = Transforms::new();
    for n in 1..=4 {
        let psi = ab_index(&generate(PosetKind::Boolean, n).unwrap()).unwrap();
        let image = t.second_kind_ab(&psi).unwrap();
        println!("B{n}: II(psi) = {} * psi: {}", 1 << n, image == psi.scale_int(1 << n));
    }

    let report = eigen_experiments(5).unwrap();
    println!("\ndegree  kernel  antisymmetric  compositions span symmetric part");
    for d in &report.degrees {
        println!("{:>6}  {:>6}  {:>13}  {}", d.n, d.kernel_dim, d.asym_dim, d.compositions_span_sym);
    }
    println!("\nwitnesses built from 1 by pyramid (P) and lift (L):");
    for w in report.witnesses.iter().take(10) {
        println!("  {:<6} eigenvalue {:<4} eigenvector: {}", w.word, w.eigenvalue, w.is_eigenvector);
    }
    for l in report.lift_failures() {
        println!("lift does not keep the eigenvalue of {}", l.of);
    }
}
