//! Subdivides every edge of a complex once and compares face counts with the
//! Chebyshev transforms of the original F-polynomial.
//!
//! ```text
//! cargo run --example tchebyshev_triangulation
//! ```

use poset_intervals::corpus::figure_complex;
use poset_intervals::ncpoly::q;
use poset_intervals::poset::Poset;
use poset_intervals::simplicial::{
    cheb_transform_t, cheb_transform_u_shifted, order_complex_of_intervals_check, second_kind_links,
    tchebyshev_triangulation,
};

fn main() {
    let c = figure_complex();
    println!("two triangles on an edge: f = {:?}", c.f_vector());

    let mut order = c.edges();
    let forward = tchebyshev_triangulation(&c, &order).unwrap();
    order.reverse();
    let backward = tchebyshev_triangulation(&c, &order).unwrap();
    println!("triangulated, forward order:  f = {:?}", forward.f_vector());
    println!("triangulated, reversed order: f = {:?}", backward.f_vector());
    println!("F(x) = {}", c.f_polynomial());
    println!("F of the triangulation = {}", forward.f_polynomial());
    println!("T applied to F         = {}", cheb_transform_t(&c.f_polynomial()));

    let verts: Vec<String> = c.vertices().iter().cloned().collect();
    let links = second_kind_links(&forward, &verts).unwrap();
    println!("summed F of the vertex links = {}", links.f_polynomial());
    println!("twice shifted U of F         = {}", cheb_transform_u_shifted(&c.f_polynomial()).scale(&q(2, 1)));

    let p = Poset::new(&["u1", "u2", "u3", "u4"], &[("u1", "u2"), ("u2", "u3"), ("u1", "u4")]).unwrap();
    println!(
        "order complex of intervals equals the triangulated order complex: {}",
        order_complex_of_intervals_check(&p).unwrap()
    );
}
