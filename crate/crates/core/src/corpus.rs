//! The fixed collection of small objects that the verification suites run over.
//!
//! Everything is deterministic given the seed for the random subposets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{direct_product, dual, generate, GradedPoset, Poset, PosetKind};
use crate::simplicial::SimplicialComplex;

/// Cap on the size of products kept in the corpus.
pub const PRODUCT_CAP: usize = 200;

/// Number of random subposets of the rank-4 Boolean algebra.
pub const RANDOM_COUNT: usize = 20;

#[derive(Clone, Debug)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

fn named<T>(name: impl Into<String>, value: T) -> Named<T> {
    Named { name: name.into(), value }
}

/// Boolean algebras, ladders and chains with size parameter up to 4, and
/// cube face lattices up to dimension 3.
pub fn base_posets() -> Vec<Named<GradedPoset>> {
    let mut out = Vec::new();
    for (kind, max) in [
        (PosetKind::Boolean, 4),
        (PosetKind::Ladder, 4),
        (PosetKind::Chain, 4),
        (PosetKind::CubeLattice, 3),
    ] {
        for n in 1..=max {
            out.push(named(format!("{}-{n}", kind.name()), generate(kind, n).expect("n >= 1")));
        }
    }
    out
}

/// Random subsets of the proper part of the rank-4 Boolean algebra, with
/// bottom and top forced, kept when the induced order is graded by the
/// Boolean rank. Rejected draws are skipped, so the list depends only on
/// `seed`.
pub fn random_subposets(seed: u64, count: usize) -> Vec<Named<GradedPoset>> {
    let b4 = generate(PosetKind::Boolean, 4).expect("n >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let keep: Vec<usize> = (0..b4.len())
            .filter(|&i| i == b4.bottom() || i == b4.top() || rng.random_bool(0.5))
            .collect();
        let Ok(g) = GradedPoset::from_poset(b4.poset().subposet(&keep)) else {
            continue;
        };
        if keep.iter().enumerate().all(|(k, &i)| g.rank_of(k) == b4.rank_of(i)) {
            out.push(named(format!("random-{}", out.len()), g));
        }
    }
    out
}

/// Base posets, the random subposets and their duals.
pub fn graded_posets(seed: u64) -> Vec<Named<GradedPoset>> {
    let mut out = base_posets();
    let random = random_subposets(seed, RANDOM_COUNT);
    for r in &random {
        out.push(named(format!("dual({})", r.name), dual(&r.value)));
    }
    out.extend(random);
    out
}

/// Unordered pairs (with repetition) from `posets` whose product has at
/// most `cap` elements.
pub fn pairs_under(posets: &[Named<GradedPoset>], cap: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..posets.len() {
        for j in i..posets.len() {
            if posets[i].value.len() * posets[j].value.len() <= cap {
                out.push((i, j));
            }
        }
    }
    out
}

/// Direct products of the base posets under [`PRODUCT_CAP`].
pub fn products(posets: &[Named<GradedPoset>]) -> Vec<Named<GradedPoset>> {
    pairs_under(posets, PRODUCT_CAP)
        .into_iter()
        .map(|(i, j)| {
            let (p, q) = (&posets[i], &posets[j]);
            named(format!("{}×{}", p.name, q.name), direct_product(&p.value, &q.value))
        })
        .collect()
}

/// The full graded corpus: [`graded_posets`] plus products of base posets.
pub fn graded_corpus(seed: u64) -> Vec<Named<GradedPoset>> {
    let mut out = graded_posets(seed);
    out.extend(products(&base_posets()));
    out
}

/// Posets that are neither bounded nor graded.
pub fn ungraded_posets() -> Vec<Named<Poset>> {
    let p = |e: &[&str], r: &[(&str, &str)]| Poset::new(e, r).expect("static poset");
    vec![
        named("figure-2", p(&["u1", "u2", "u3", "u4"], &[("u1", "u2"), ("u2", "u3"), ("u1", "u4")])),
        named("antichain-1", p(&["x"], &[])),
        named("antichain-3", p(&["x", "y", "z"], &[])),
        named("vee", p(&["x", "y", "z"], &[("x", "y"), ("x", "z")])),
        named("zigzag", p(&["w", "x", "y", "z"], &[("w", "x"), ("y", "x"), ("y", "z")])),
    ]
}

fn complex(vertices: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
    let facets: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(vertices, &facets).expect("static complex")
}

/// Two triangles glued along an edge.
pub fn figure_complex() -> SimplicialComplex {
    complex(&["v1", "v2", "v3", "v4"], &[&["v1", "v2", "v3"], &["v1", "v2", "v4"]])
}

/// Small complexes, including order complexes of proper parts of corpus
/// posets with at most six edges.
pub fn small_complexes() -> Vec<Named<SimplicialComplex>> {
    let mut out = vec![
        named("figure-1", figure_complex()),
        named("point", complex(&["p"], &[])),
        named("edge", complex(&["u", "v"], &[&["u", "v"]])),
        named("path", complex(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]])),
        named("triangle", complex(&["1", "2", "3"], &[&["1", "2", "3"]])),
        named("triangle-boundary", complex(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]])),
        named("tetrahedron", complex(&["1", "2", "3", "4"], &[&["1", "2", "3", "4"]])),
    ];
    for p in base_posets() {
        let c = SimplicialComplex::order_complex(&p.value, true).expect("small poset");
        if !c.edges().is_empty() && c.edges().len() <= 6 {
            out.push(named(format!("order({})", p.name), c));
        }
    }
    out
}
