//! Verification suites: each identity is checked on the corpus and recorded
//! as a case whose expected and actual values are compared as canonical strings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::{self, Named};
use crate::flag::{ab_index, cd_index, upsilon};
use crate::ncpoly::{expand, q, rewrite_ab_to_cd, Alphabet, CdConvention, NcPoly, Word};
use crate::poset::{
    count_chains_with_support, direct_product, generate, graded_interval_poset, is_isomorphic_with_cap, pell,
    second_kind_transform, second_kind_via_products, GradedPoset, PosetKind, PosetMultiset,
};
use crate::simplicial::{
    cheb_transform_t, cheb_transform_u_shifted, order_complex_of_intervals_check, second_kind_links,
    tchebyshev_triangulation, SimplicialComplex,
};
use crate::transforms::{
    check_ii_ladder, check_ladder, check_mcce, check_uce, delannoy_m, eigen_experiments, gamma, gamma_closed_form,
    Transforms,
};

/// Known f-vectors of the order complex of the proper part of the graded
/// interval poset of the Boolean algebra, `n = 1..=4`.
pub const TYPE_B_ROWS: [&[u64]; 4] = [&[1, 2], &[1, 8, 8], &[1, 26, 72, 48], &[1, 80, 464, 768, 384]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Iota,
    IntervalAb,
    IntervalCd,
    Ii,
    Mixing,
    Delannoy,
    Ladder,
    Pell,
    TchebTriangulation,
    TypeB,
    Eigen,
    All,
}

impl Suite {
    /// Every suite except `All`, in report order.
    pub const EACH: [Suite; 11] = [
        Suite::Iota,
        Suite::IntervalAb,
        Suite::IntervalCd,
        Suite::Ii,
        Suite::Mixing,
        Suite::Delannoy,
        Suite::Ladder,
        Suite::Pell,
        Suite::TchebTriangulation,
        Suite::TypeB,
        Suite::Eigen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Iota => "iota",
            Suite::IntervalAb => "jojic-ab",
            Suite::IntervalCd => "jojic-cd",
            Suite::Ii => "ii",
            Suite::Mixing => "mixing",
            Suite::Delannoy => "delannoy",
            Suite::Ladder => "ladder",
            Suite::Pell => "pell",
            Suite::TchebTriangulation => "tcheb-triangulation",
            Suite::TypeB => "typeb",
            Suite::Eigen => "eigen",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub actual: String,
    pub description: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub failed: usize,
    pub passed: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub cases: Vec<Case>,
    pub suite: String,
    pub summary: Summary,
}

impl VerificationReport {
    fn new(suite: Suite, cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        VerificationReport {
            summary: Summary {
                failed: cases.len() - passed,
                passed,
                total: cases.len(),
            },
            cases,
            suite: suite.name().to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Cases(Vec<Case>);

impl Cases {
    fn eq(&mut self, description: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.0.push(Case {
            pass: expected == actual,
            actual,
            description: description.into(),
            expected,
        });
    }

    fn check<T: fmt::Display, E: fmt::Display>(
        &mut self,
        description: impl Into<String>,
        expected: impl fmt::Display,
        actual: Result<T, E>,
    ) {
        match actual {
            Ok(a) => self.eq(description, expected, a),
            Err(e) => self.eq(description, expected, format!("error: {e}")),
        }
    }

    /// Records a value without asserting anything about it.
    fn report(&mut self, description: impl Into<String>, actual: impl fmt::Display) {
        self.0.push(Case {
            actual: actual.to_string(),
            description: description.into(),
            expected: "(reported)".into(),
            pass: true,
        });
    }
}

fn ab(s: &str) -> NcPoly {
    NcPoly::parse(Alphabet::Ab, s).expect("static polynomial")
}

fn cd(s: &str) -> NcPoly {
    NcPoly::parse(Alphabet::Cd, s).expect("static polynomial")
}

/// Graded corpus posets of rank `1..=5`.
pub fn route_corpus(seed: u64) -> Vec<Named<GradedPoset>> {
    corpus::graded_corpus(seed)
        .into_iter()
        .filter(|p| (1..=5).contains(&p.value.rank()))
        .collect()
}

/// Sum of the ab-indices of the members.
pub fn total_ab_index(m: &PosetMultiset) -> NcPoly {
    let mut out = NcPoly::zero(Alphabet::Ab);
    for member in m.iter() {
        out = &out + &ab_index(&member.poset).expect("members have positive rank");
    }
    out
}

pub fn run(suite: Suite, seed: u64) -> VerificationReport {
    let mut cases = Cases::default();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                for mut c in run(s, seed).cases {
                    c.description = format!("[{}] {}", s.name(), c.description);
                    cases.0.push(c);
                }
            }
        }
        Suite::Iota => iota_suite(&mut cases, seed),
        Suite::IntervalAb => interval_ab_suite(&mut cases, seed),
        Suite::IntervalCd => interval_cd_suite(&mut cases, seed),
        Suite::Ii => ii_suite(&mut cases, seed),
        Suite::Mixing => mixing_suite(&mut cases, seed),
        Suite::Delannoy => delannoy_suite(&mut cases),
        Suite::Ladder => ladder_suite(&mut cases),
        Suite::Pell => pell_suite(&mut cases, seed),
        Suite::TchebTriangulation => tcheb_suite(&mut cases, seed),
        Suite::TypeB => typeb_suite(&mut cases, seed),
        Suite::Eigen => eigen_suite(&mut cases),
    }
    VerificationReport::new(suite, cases.0)
}

fn iota_suite(cases: &mut Cases, seed: u64) {
    let mut t = Transforms::new();
    for (w, e) in [
        ("a", "a^2+2ba"),
        ("b", "4b^2+2ab+ba"),
        ("ab", "a^2b+aba+2bab+2b^2a+ba^2"),
        ("ba", "a^2b+aba+2bab+2b^2a+ba^2"),
        ("b^2", "8b^3+4ab^2+2bab+aba+2b^2a"),
    ] {
        cases.check(format!("iota({w})"), ab(e), t.iota(&ab(w)));
    }
    for p in route_corpus(seed) {
        let ip = graded_interval_poset(&p.value);
        let lhs = upsilon(&ip).expect("rank >= 1");
        cases.check(
            format!("flag polynomial of interval poset of {}", p.name),
            &lhs,
            t.iota(&upsilon(&p.value).expect("rank >= 1")),
        );
    }
}

fn interval_ab_suite(cases: &mut Cases, seed: u64) {
    let mut t = Transforms::new();
    cases.check("I(1)", ab("a+b"), t.interval_ab(&NcPoly::one(Alphabet::Ab)));
    for p in route_corpus(seed) {
        let ip = graded_interval_poset(&p.value);
        cases.check(
            format!("ab-index of interval poset of {}", p.name),
            ab_index(&ip).expect("rank >= 1"),
            t.interval_ab(&ab_index(&p.value).expect("rank >= 1")),
        );
    }
}

fn interval_cd_suite(cases: &mut Cases, seed: u64) {
    let mut t = Transforms::new();
    cases.check("I_cd(c)", cd("c^2+2d"), t.interval_cd(&cd("c")));
    for deg in 0..=4 {
        for w in Word::cd_words_of_degree(deg) {
            let word = NcPoly::monomial(Alphabet::Cd, w.clone(), q(1, 1));
            let routed = t
                .interval_ab(&expand(&word, CdConvention::Psi))
                .map_err(|e| e.to_string())
                .and_then(|p| rewrite_ab_to_cd(&p, CdConvention::Psi).map_err(|e| e.to_string()));
            cases.check(format!("I_cd({}) against the ab route", w.as_str()), t.interval_cd_word(&w), routed);
        }
    }
    for p in route_corpus(seed).into_iter().filter(|p| p.value.is_eulerian()) {
        let ip = graded_interval_poset(&p.value);
        cases.check(
            format!("cd-index of interval poset of {}", p.name),
            cd_index(&ip).expect("Eulerian"),
            t.interval_cd(&cd_index(&p.value).expect("Eulerian")),
        );
    }
}

fn ii_suite(cases: &mut Cases, seed: u64) {
    let mut t = Transforms::new();
    cases.check("II(c)", ab("4a+4b"), t.second_kind_ab(&ab("a+b")));
    for p in route_corpus(seed) {
        let psi = ab_index(&p.value).expect("rank >= 1");
        let expected = t.second_kind_ab(&psi).expect("ab input");
        cases.eq(
            format!("total ab-index of second-kind transform of {} (upper intervals)", p.name),
            &expected,
            total_ab_index(&second_kind_transform(&p.value)),
        );
        cases.eq(
            format!("total ab-index of second-kind transform of {} (products)", p.name),
            &expected,
            total_ab_index(&second_kind_via_products(&p.value)),
        );
    }
    for n in 1..=4 {
        let psi = ab_index(&generate(PosetKind::Boolean, n).expect("n >= 1")).expect("rank >= 1");
        cases.check(
            format!("II of the boolean-{n} ab-index is 2^{n} times it"),
            psi.scale_int(1 << n),
            t.second_kind_ab(&psi),
        );
    }
}

/// Pairs of graded posets used for product checks: base posets and the
/// first few random subposets, with products of rank at most 7.
pub fn mixing_pairs(seed: u64) -> Vec<(Named<GradedPoset>, Named<GradedPoset>)> {
    let mut posets = corpus::base_posets();
    posets.extend(corpus::random_subposets(seed, 4));
    corpus::pairs_under(&posets, corpus::PRODUCT_CAP)
        .into_iter()
        .filter(|&(i, j)| posets[i].value.rank() + posets[j].value.rank() <= 7)
        .map(|(i, j)| (posets[i].clone(), posets[j].clone()))
        .collect()
}

fn mixing_suite(cases: &mut Cases, seed: u64) {
    let mut t = Transforms::new();
    let one = NcPoly::one(Alphabet::Cd);
    cases.check("M(1,1)", cd("c"), t.mixing_cd(&one, &one));
    cases.check("M(1,c)", cd("c^2+d"), t.mixing_cd(&one, &cd("c")));
    for total in 0..=5 {
        for du in 0..=total {
            for u in Word::cd_words_of_degree(du) {
                for v in Word::cd_words_of_degree(total - du) {
                    let native = t.mixing_cd_words(&u, &v);
                    let def = t
                        .mixing_def(
                            &expand(&NcPoly::monomial(Alphabet::Cd, u.clone(), q(1, 1)), CdConvention::Psi),
                            &expand(&NcPoly::monomial(Alphabet::Cd, v.clone(), q(1, 1)), CdConvention::Psi),
                        )
                        .expect("ab input");
                    let name = format!("M({},{})", u.as_str(), v.as_str());
                    cases.eq(format!("{name}: cd recursion against definition"), expand(&native, CdConvention::Psi), def);
                    cases.eq(format!("{name}: symmetry"), &native, t.mixing_cd_words(&v, &u));
                }
            }
        }
    }
    for (p, q) in mixing_pairs(seed) {
        let prod = direct_product(&p.value, &q.value);
        cases.check(
            format!("ab-index of {}×{}", p.name, q.name),
            ab_index(&prod).expect("rank >= 1"),
            t.mixing_def(&ab_index(&p.value).expect("rank"), &ab_index(&q.value).expect("rank")),
        );
    }
}

fn c_pow(n: usize) -> NcPoly {
    cd("c").pow(n)
}

fn delannoy_suite(cases: &mut Cases) {
    let mut t = Transforms::new();
    for i in 0..=5 {
        for j in 0..=5 {
            cases.check(
                format!("Delannoy weight at ({i},{j}) against M(c^{i},c^{j})"),
                delannoy_m(i, j),
                t.mixing_cd(&c_pow(i), &c_pow(j)),
            );
            let bad = check_mcce(i, j).map(|m| m.len());
            cases.check(format!("ce-coefficients of M(c^{i},c^{j})"), 0, bad);
        }
    }
    let diag = cd("2d-c^2");
    let c = cd("c");
    for i in 0..=4 {
        for j in 0..=4 {
            let m = |x, y| delannoy_m(x, y);
            let rhs = &(&(&m(i, j + 1) + &m(i + 1, j)) * &c) + &(&m(i, j) * &diag);
            cases.eq(format!("recurrence at ({i},{j})"), m(i + 1, j + 1), rhs);
        }
    }
}

fn ladder_suite(cases: &mut Cases) {
    let mut t = Transforms::new();
    for n in 0..=6 {
        cases.check(format!("I_cd(c^{n}) coefficients"), 0, check_ladder(&mut t, n).map(|m| m.len()));
        cases.check(format!("II(c^{n}) cd-coefficients"), 0, check_ii_ladder(&mut t, n).map(|m| m.len()));
        cases.check(format!("II(c^{n}) ce-coefficients"), 0, check_uce(&mut t, n).map(|m| m.len()));
    }
    for n in 0..=8 {
        cases.eq(format!("gamma({n})"), gamma_closed_form(n), gamma(n));
    }
    cases.eq("gamma(4)", 10, gamma(4));
    for n in 1..=3 {
        let l = generate(PosetKind::Ladder, n).expect("n >= 1");
        cases.check(
            format!("cd-index of interval poset of ladder-{n}"),
            cd_index(&graded_interval_poset(&l)).expect("Eulerian"),
            t.interval_cd(&c_pow(n)),
        );
        let total = total_ab_index(&second_kind_transform(&l));
        cases.check(
            format!("total cd-index of second-kind transform of ladder-{n}"),
            rewrite_ab_to_cd(&total, CdConvention::Psi).expect("cd expressible"),
            t.second_kind_cd(&c_pow(n)),
        );
    }
}

/// Chains `0̂ = x_0 < ... < x_m = 1̂` with `m <= max_len`, as label lists.
pub fn extreme_chains(p: &GradedPoset, max_len: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![p.bottom()]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        if last == p.top() {
            out.push(chain.iter().map(|&i| p.label(i).to_string()).collect());
            continue;
        }
        if chain.len() > max_len {
            continue;
        }
        for j in p.poset().above(last) {
            let mut next = chain.clone();
            next.push(j);
            stack.push(next);
        }
    }
    out.sort();
    out
}

fn pell_suite(cases: &mut Cases, seed: u64) {
    let l2 = generate(PosetKind::Ladder, 2).expect("n >= 1");
    let (bot, top) = (l2.label(l2.bottom()), l2.label(l2.top()));
    cases.check("ladder-2, support of length 1", 3, count_chains_with_support(&l2, &[bot, top]));
    let mid = (0..l2.len()).find(|&i| l2.rank_of(i) == 1).expect("atom");
    cases.check(
        "ladder-2, support of length 2",
        7,
        count_chains_with_support(&l2, &[bot, l2.label(mid), top]),
    );
    for p in corpus::graded_posets(seed) {
        let chains = extreme_chains(&p.value, 6);
        let ok = chains
            .iter()
            .filter(|c| {
                let m = c.len() - 1;
                count_chains_with_support(&p.value, c).ok() == Some(pell(m) + pell(m + 1))
            })
            .count();
        cases.eq(
            format!("support counts on {}", p.name),
            format!("{} of {}", chains.len(), chains.len()),
            format!("{ok} of {}", chains.len()),
        );
    }
}

/// Every ordering of the edges, in lexicographic order of index sequences.
pub fn edge_orders(edges: &[(String, String)]) -> Vec<Vec<(String, String)>> {
    fn go(rest: &mut Vec<(String, String)>, cur: &mut Vec<(String, String)>, out: &mut Vec<Vec<(String, String)>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let e = rest.remove(i);
            cur.push(e.clone());
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, e);
        }
    }
    let mut out = Vec::new();
    go(&mut edges.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn fmt_vec(v: &[u64]) -> String {
    format!("{v:?}")
}

fn tcheb_suite(cases: &mut Cases, seed: u64) {
    for c in corpus::small_complexes() {
        let cx = &c.value;
        let orders = edge_orders(&cx.edges());
        let first = tchebyshev_triangulation(cx, &orders[0]).expect("valid order");
        let same = orders
            .iter()
            .filter(|o| tchebyshev_triangulation(cx, o).map(|t| t.f_vector()).ok() == Some(first.f_vector()))
            .count();
        cases.eq(
            format!("{}: f-vector over all {} edge orders", c.name, orders.len()),
            orders.len(),
            same,
        );
        cases.eq(
            format!("{}: F-polynomial of the triangulation", c.name),
            cheb_transform_t(&cx.f_polynomial()),
            first.f_polynomial(),
        );
        let verts: Vec<String> = cx.vertices().iter().cloned().collect();
        let links = second_kind_links(&first, &verts).expect("original vertices");
        cases.eq(
            format!("{}: summed link F-polynomial", c.name),
            cheb_transform_u_shifted(&cx.f_polynomial()).scale(&q(2, 1)),
            links.f_polynomial(),
        );
    }
    let mut small: Vec<(String, crate::poset::Poset)> = corpus::graded_corpus(seed)
        .into_iter()
        .filter(|p| p.value.len() <= 8)
        .map(|p| (p.name, p.value.into_poset()))
        .collect();
    small.extend(corpus::ungraded_posets().into_iter().map(|p| (p.name, p.value)));
    for (name, p) in small {
        cases.check(
            format!("{name}: order complex of intervals is a Tchebyshev triangulation"),
            true,
            order_complex_of_intervals_check(&p),
        );
    }
}

/// Order complex of the graded interval poset of the Boolean algebra with
/// its bottom and top removed.
pub fn type_b_complex(n: usize) -> SimplicialComplex {
    let ip = graded_interval_poset(&generate(PosetKind::Boolean, n).expect("n >= 1"));
    SimplicialComplex::order_complex(&ip, true).expect("small complex")
}

/// `Σ (-1)^{i} f_{i-1}` over an f-vector starting at `f_{-1}`, negated so
/// that a sphere of dimension `d` gives `(-1)^d`.
pub fn reduced_euler_characteristic(f: &[u64]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { -(x as i64) } else { x as i64 })
        .sum()
}

fn typeb_suite(cases: &mut Cases, seed: u64) {
    for n in 1..=4 {
        let f = type_b_complex(n).f_vector();
        cases.eq(format!("type B f-vector, n = {n}"), fmt_vec(TYPE_B_ROWS[n - 1]), fmt_vec(&f));
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        cases.eq(format!("reduced Euler characteristic, n = {n}"), sign, reduced_euler_characteristic(&f));
    }
    for p in route_corpus(seed).into_iter().filter(|p| p.value.is_eulerian()) {
        cases.eq(
            format!("interval poset of {} is Eulerian", p.name),
            true,
            graded_interval_poset(&p.value).is_eulerian(),
        );
    }
    for n in 1..=3 {
        let ip = graded_interval_poset(&generate(PosetKind::Boolean, n).expect("n >= 1"));
        let cube = generate(PosetKind::CubeLattice, n).expect("n >= 1");
        cases.check(
            format!("interval poset of boolean-{n} is the cube-{n} face lattice"),
            true,
            is_isomorphic_with_cap(ip.poset(), cube.poset(), 128),
        );
    }
}

fn eigen_suite(cases: &mut Cases) {
    let r = match eigen_experiments(6) {
        Ok(r) => r,
        Err(e) => {
            cases.eq("eigen experiments", "report", format!("error: {e}"));
            return;
        }
    };
    for d in &r.degrees {
        cases.eq(format!("degree {}: Asym is in the kernel", d.n), true, d.asym_in_kernel);
        cases.report(
            format!("degree {}: kernel dimension vs dim Asym", d.n),
            format!("{} vs {}", d.kernel_dim, d.asym_dim),
        );
        cases.report(
            format!("degree {}: Pyr/lift compositions span Sym ({} of {})", d.n, d.composition_span, d.sym_dim),
            d.compositions_span_sym,
        );
    }
    for p in &r.products {
        cases.eq(
            format!("M({}, {}) has eigenvalue {}", p.left, p.right, p.eigenvalue),
            true,
            p.is_eigenvector,
        );
    }
    let failures: Vec<&str> = r.lift_failures().iter().map(|l| l.of.as_str()).collect();
    cases.report(
        format!("lift keeps the eigenvalue on {} of {} eigenvectors", r.lifts.len() - failures.len(), r.lifts.len()),
        if failures.is_empty() { "all".to_string() } else { format!("fails on {}", failures.join(", ")) },
    );
}
