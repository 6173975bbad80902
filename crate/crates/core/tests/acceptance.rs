//! One PASS/FAIL line per acceptance criterion. Expected values come from
//! brute-force constructions in this file (interval posets, products, chain
//! counts, flag vectors, Chebyshev polynomials) rather than from the library
//! code paths under test. All comparisons are exact: tolerance is zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use poset_intervals::corpus::{self, figure_complex, small_complexes};
use poset_intervals::ncpoly::{cd_to_ce, Alphabet, NcPoly, Word};
use poset_intervals::poset::{
    count_chains_with_support, generate, is_isomorphic_with_cap, second_kind_transform, GradedPoset, Poset,
    PosetKind,
};
use poset_intervals::simplicial::{interval_edge_order, midpoint_label, second_kind_links, tchebyshev_triangulation, SimplicialComplex};
use poset_intervals::transforms::{delannoy_m, eigen_experiments, Transforms};
use poset_intervals::verify::{mixing_pairs, route_corpus, type_b_complex, TYPE_B_ROWS};
use poset_intervals::Rational;

const ISO_CAP: usize = 2048;

/// Criteria whose literal statement does not hold; they print FAIL with the
/// reason and are not asserted.
const KNOWN_FALSE: [usize; 2] = [7, 11];

// ---------------------------------------------------------------------------
// Oracle posets: labels, ranks and a full comparability matrix.

#[derive(Clone, Debug)]
struct Ord {
    labels: Vec<String>,
    rank: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

impl Ord {
    fn from_graded(p: &GradedPoset) -> Ord {
        let n = p.len();
        Ord {
            labels: p.labels().to_vec(),
            rank: (0..n).map(|i| p.rank_of(i)).collect(),
            leq: (0..n).map(|i| (0..n).map(|j| p.leq(i, j)).collect()).collect(),
        }
    }

    fn from_poset(p: &Poset) -> Ord {
        let n = p.len();
        Ord {
            labels: p.labels().to_vec(),
            rank: vec![0; n],
            leq: (0..n).map(|i| (0..n).map(|j| p.leq(i, j)).collect()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j])).expect("bottom")
    }

    fn top(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i])).expect("top")
    }

    fn height(&self) -> usize {
        self.rank[self.top()]
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in 0..self.len() {
                if self.leq[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Intervals ordered by containment, without the empty interval.
    fn intervals(&self) -> (Ord, Vec<(usize, usize)>) {
        let pairs = self.pairs();
        let labels = pairs
            .iter()
            .map(|&(u, v)| format!("[{},{}]", self.labels[u], self.labels[v]))
            .collect();
        let rank = pairs.iter().map(|&(u, v)| self.rank[v] - self.rank[u]).collect();
        let leq = pairs
            .iter()
            .map(|&(u, v)| pairs.iter().map(|&(x, y)| self.leq[x][u] && self.leq[v][y]).collect())
            .collect();
        (Ord { labels, rank, leq }, pairs)
    }

    /// Intervals with the empty interval adjoined at index 0; `[u,v]` has
    /// rank `rank(v) - rank(u) + 1`.
    fn graded_intervals(&self) -> (Ord, Vec<Option<(usize, usize)>>) {
        let (ip, pairs) = self.intervals();
        let n = ip.len() + 1;
        let mut labels = vec!["∅".to_string()];
        labels.extend(ip.labels);
        let mut rank = vec![0];
        rank.extend(ip.rank.iter().map(|r| r + 1));
        let leq = (0..n)
            .map(|i| (0..n).map(|j| i == 0 || (j > 0 && ip.leq[i - 1][j - 1])).collect())
            .collect();
        let mut tagged = vec![None];
        tagged.extend(pairs.into_iter().map(Some));
        (Ord { labels, rank, leq }, tagged)
    }

    fn product(&self, o: &Ord) -> Ord {
        let m = o.len();
        let n = self.len() * m;
        Ord {
            labels: (0..n).map(|x| format!("({},{})", self.labels[x / m], o.labels[x % m])).collect(),
            rank: (0..n).map(|x| self.rank[x / m] + o.rank[x % m]).collect(),
            leq: (0..n)
                .map(|x| (0..n).map(|y| self.leq[x / m][y / m] && o.leq[x % m][y % m]).collect())
                .collect(),
        }
    }

    fn diamond(&self, o: &Ord) -> Ord {
        let (pb, qb) = (self.bottom(), o.bottom());
        let mut cells = vec![None];
        for i in (0..self.len()).filter(|&i| i != pb) {
            for j in (0..o.len()).filter(|&j| j != qb) {
                cells.push(Some((i, j)));
            }
        }
        Ord {
            labels: cells
                .iter()
                .map(|c| match c {
                    None => "⊥".to_string(),
                    Some((i, j)) => format!("({},{})", self.labels[*i], o.labels[*j]),
                })
                .collect(),
            rank: cells.iter().map(|c| c.map_or(0, |(i, j)| self.rank[i] + o.rank[j] - 1)).collect(),
            leq: cells
                .iter()
                .map(|a| {
                    cells
                        .iter()
                        .map(|b| match (a, b) {
                            (None, _) => true,
                            (_, None) => false,
                            (Some((i, j)), Some((k, l))) => self.leq[*i][*k] && o.leq[*j][*l],
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Induced subposet with ranks shifted so the least kept rank is 0.
    fn sub(&self, keep: &[usize]) -> Ord {
        let base = keep.iter().map(|&i| self.rank[i]).min().unwrap_or(0);
        Ord {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            rank: keep.iter().map(|&i| self.rank[i] - base).collect(),
            leq: keep.iter().map(|&i| keep.iter().map(|&j| self.leq[i][j]).collect()).collect(),
        }
    }

    fn to_poset(&self) -> Poset {
        let mut rel = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.lt(i, j) {
                    rel.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        Poset::new(&self.labels, &rel).expect("oracle poset")
    }

    fn by_rank(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.rank[i]);
        order
    }

    /// Flag f-vector: rank-set mask (bit `r-1` for interior rank `r`) to count.
    fn flag(&self) -> BTreeMap<u32, u64> {
        let (bot, top, h) = (self.bottom(), self.top(), self.height());
        let mut cnt: Vec<HashMap<u32, u64>> = vec![HashMap::new(); self.len()];
        cnt[bot].insert(0, 1);
        for x in self.by_rank() {
            if x == bot {
                continue;
            }
            let bit = if x == top { 0 } else { 1u32 << (self.rank[x] - 1) };
            let mut here: HashMap<u32, u64> = HashMap::new();
            for y in 0..self.len() {
                if self.lt(y, x) {
                    for (&m, &c) in &cnt[y] {
                        *here.entry(m | bit).or_default() += c;
                    }
                }
            }
            cnt[x] = here;
        }
        let n = h.saturating_sub(1);
        (0..1u32 << n).map(|m| (m, cnt[top].get(&m).copied().unwrap_or(0))).collect()
    }

    fn upsilon(&self) -> BTreeMap<String, BigInt> {
        let n = self.height() - 1;
        self.flag()
            .into_iter()
            .filter(|&(_, f)| f != 0)
            .map(|(m, f)| (mask_word(m, n), BigInt::from(f)))
            .collect()
    }

    fn psi(&self) -> BTreeMap<String, BigInt> {
        let n = self.height() - 1;
        let f = self.flag();
        let mut out = BTreeMap::new();
        for &s in f.keys() {
            let mut h = BigInt::zero();
            for (&t, &ft) in &f {
                if t & !s == 0 {
                    let sign = if (s & !t).count_ones() % 2 == 0 { 1 } else { -1 };
                    h += BigInt::from(ft) * sign;
                }
            }
            if !h.is_zero() {
                out.insert(mask_word(s, n), h);
            }
        }
        out
    }

    /// Every interval of positive length has as many even-rank as odd-rank elements.
    fn is_eulerian(&self) -> bool {
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.lt(x, y) {
                    let mut bal = 0i64;
                    for z in 0..self.len() {
                        if self.leq[x][z] && self.leq[z][y] {
                            bal += if self.rank[z].is_multiple_of(2) { 1 } else { -1 };
                        }
                    }
                    if bal != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chains of strictly increasing elements (including the empty chain),
    /// skipping elements for which `skip` holds.
    fn chains(&self, skip: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let order: Vec<usize> = self.by_rank().into_iter().filter(|&i| !skip(i)).collect();
        let mut out = vec![vec![]];
        let mut stack: Vec<Vec<usize>> = order.iter().map(|&i| vec![i]).collect();
        while let Some(c) = stack.pop() {
            let last = *c.last().unwrap();
            for &j in &order {
                if self.lt(last, j) {
                    let mut d = c.clone();
                    d.push(j);
                    stack.push(d);
                }
            }
            out.push(c);
        }
        out
    }
}

fn mask_word(m: u32, n: usize) -> String {
    (0..n).map(|i| if m >> i & 1 == 1 { 'b' } else { 'a' }).collect()
}

fn map_of(p: &NcPoly) -> BTreeMap<String, Rational> {
    p.terms().map(|(w, c)| (w.as_str().to_string(), c.clone())).collect()
}

fn int_map(m: &BTreeMap<String, BigInt>) -> BTreeMap<String, Rational> {
    m.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (w.clone(), Rational::from_integer(c.clone())))
        .collect()
}

fn add_into(acc: &mut BTreeMap<String, BigInt>, m: &BTreeMap<String, BigInt>) {
    for (w, c) in m {
        *acc.entry(w.clone()).or_insert_with(BigInt::zero) += c;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn poly(alphabet: Alphabet, m: &BTreeMap<String, Rational>) -> NcPoly {
    let mut p = NcPoly::zero(alphabet);
    for (w, c) in m {
        p.add_term(Word::from(w.as_str()), c.clone());
    }
    p
}

fn ab(s: &str) -> NcPoly {
    NcPoly::parse(Alphabet::Ab, s).unwrap()
}

fn cd(s: &str) -> NcPoly {
    NcPoly::parse(Alphabet::Cd, s).unwrap()
}

/// Substitutes `c = a + b`, `d = ab + ba` word by word.
fn expand_cd(m: &BTreeMap<String, Rational>) -> BTreeMap<String, Rational> {
    let mut out: BTreeMap<String, Rational> = BTreeMap::new();
    for (w, coeff) in m {
        let mut words: Vec<String> = vec![String::new()];
        for ch in w.chars() {
            let pieces: &[&str] = if ch == 'c' { &["a", "b"] } else { &["ab", "ba"] };
            words = words
                .iter()
                .flat_map(|x| pieces.iter().map(move |p| format!("{x}{p}")))
                .collect();
        }
        for x in words {
            *out.entry(x).or_insert_with(Rational::zero) += coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn cd_words(deg: usize) -> Vec<String> {
    match deg {
        0 => vec![String::new()],
        1 => vec!["c".into()],
        _ => {
            let mut out: Vec<String> = cd_words(deg - 1).into_iter().map(|w| w + "c").collect();
            out.extend(cd_words(deg - 2).into_iter().map(|w| w + "d"));
            out
        }
    }
}

/// Exponents `k_0..k_r` of `c^{k_0} d c^{k_1} ... d c^{k_r}`.
fn ks(w: &str) -> Vec<u64> {
    w.split('d').map(|s| s.len() as u64).collect()
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn pell(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, 2 * b + a);
    }
    a
}

/// Chebyshev polynomials of the first (`first = true`) or second kind, as
/// coefficient vectors of degree `0..=n`.
fn chebyshev(first: bool, max: usize) -> Vec<Vec<Rational>> {
    let int = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>();
    let mut out = vec![int(&[1]), if first { int(&[0, 1]) } else { int(&[0, 2]) }];
    for n in 2..=max {
        let mut next = vec![Rational::zero(); n + 1];
        for (i, c) in out[n - 1].iter().enumerate() {
            next[i + 1] += c * Rational::from_integer(2.into());
        }
        for (i, c) in out[n - 2].iter().enumerate() {
            next[i] -= c;
        }
        out.push(next);
    }
    out
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// `Σ f_{i-1} ((x-1)/2)^i` from an f-vector starting at `f_{-1}`.
fn f_poly(f: &[u64]) -> Vec<Rational> {
    let half = Rational::new(1.into(), 2.into());
    let base = [-half.clone(), half];
    let mut out = vec![Rational::zero(); f.len()];
    let mut power = vec![Rational::one()];
    for &fi in f {
        for (k, c) in power.iter().enumerate() {
            out[k] += c * Rational::from_integer(fi.into());
        }
        let mut next = vec![Rational::zero(); power.len() + 1];
        for (k, c) in power.iter().enumerate() {
            next[k] += c * &base[0];
            next[k + 1] += c * &base[1];
        }
        power = next;
    }
    trim(out)
}

/// Sends `x^n` to `basis[n + shift]`, with out-of-range images zero.
fn cheb_image(p: &[Rational], basis: &[Vec<Rational>], shift: isize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (n, c) in p.iter().enumerate() {
        let k = n as isize + shift;
        if k < 0 {
            continue;
        }
        for (i, b) in basis[k as usize].iter().enumerate() {
            out[i] += c * b;
        }
    }
    trim(out)
}

fn poly_coeffs(c: &SimplicialComplex) -> Vec<Rational> {
    trim(c.f_polynomial().coeffs().to_vec())
}

// ---------------------------------------------------------------------------

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], checked: usize) -> Outcome {
    Outcome {
        pass: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{checked} checks"),
            Some(f) => format!("{} of {checked} checks failed; first: {f}", failures.len()),
        },
    }
}

fn criterion_1() -> Outcome {
    let mut t = Transforms::new();
    let stated = [
        ("a", "a^2+2ba"),
        ("b", "4b^2+2ab+ba"),
        ("ab", "a^2b+aba+2bab+2b^2a+ba^2"),
        ("ba", "a^2b+aba+2bab+2b^2a+ba^2"),
        ("b^2", "8b^3+4ab^2+2bab+aba+2b^2a"),
    ];
    let mut bad = Vec::new();
    for (w, e) in stated {
        let got = t.iota(&ab(w)).unwrap().to_string();
        if got != ab(e).to_string() {
            bad.push(format!("iota({w}) = {got}"));
        }
    }
    outcome(&bad, stated.len())
}

fn criterion_2() -> Outcome {
    let mut t = Transforms::new();
    let mut bad = Vec::new();
    let corpus = route_corpus(0);
    for p in &corpus {
        let o = Ord::from_graded(&p.value);
        let (ip, _) = o.graded_intervals();
        if map_of(&t.iota(&poly(Alphabet::Ab, &int_map(&o.upsilon()))).unwrap()) != int_map(&ip.upsilon()) {
            bad.push(format!("upsilon route on {}", p.name));
        }
        if map_of(&t.interval_ab(&poly(Alphabet::Ab, &int_map(&o.psi()))).unwrap()) != int_map(&ip.psi()) {
            bad.push(format!("ab route on {}", p.name));
        }
    }
    outcome(&bad, 2 * corpus.len())
}

/// Upper intervals `[[x,x],[0̂,1̂]]` of the oracle graded interval poset.
fn oracle_second_kind(o: &Ord) -> Vec<(String, Ord)> {
    let (ip, tags) = o.graded_intervals();
    (0..o.len())
        .map(|x| {
            let keep: Vec<usize> = (1..ip.len())
                .filter(|&i| {
                    let (y, z) = tags[i].unwrap();
                    o.leq[y][x] && o.leq[x][z]
                })
                .collect();
            (o.labels[x].clone(), ip.sub(&keep))
        })
        .collect()
}

fn criterion_3() -> Outcome {
    let mut t = Transforms::new();
    let mut bad = Vec::new();
    let corpus = route_corpus(0);
    for p in &corpus {
        let o = Ord::from_graded(&p.value);
        let mut total = BTreeMap::new();
        for (_, m) in oracle_second_kind(&o) {
            add_into(&mut total, &m.psi());
        }
        let expected = int_map(&total);
        let predicted = map_of(&t.second_kind_ab(&poly(Alphabet::Ab, &int_map(&o.psi()))).unwrap());
        if predicted != expected {
            bad.push(format!("II_ab on {}", p.name));
        }
        for (how, members) in [
            ("upper intervals", second_kind_transform(&p.value)),
            ("products", poset_intervals::poset::second_kind_via_products(&p.value)),
        ] {
            let mut sum = BTreeMap::new();
            for m in members.iter() {
                add_into(&mut sum, &Ord::from_graded(&m.poset).psi());
            }
            if int_map(&sum) != expected {
                bad.push(format!("{how} construction on {}", p.name));
            }
        }
    }
    outcome(&bad, 3 * corpus.len())
}

fn criterion_4() -> Outcome {
    let mut t = Transforms::new();
    let mut bad = Vec::new();
    let mut checked = 0;
    let one = NcPoly::one(Alphabet::Cd);
    checked += 1;
    if t.mixing_cd(&one, &one).unwrap() != cd("c") {
        bad.push("M(1,1) != c".into());
    }
    for total in 0..=5 {
        for du in 0..=total {
            for u in cd_words(du) {
                for v in cd_words(total - du) {
                    let (pu, pv) = (NcPoly::word(Alphabet::Cd, &u), NcPoly::word(Alphabet::Cd, &v));
                    let native = t.mixing_cd(&pu, &pv).unwrap();
                    let def = t
                        .mixing_def(
                            &poly(Alphabet::Ab, &expand_cd(&map_of(&pu))),
                            &poly(Alphabet::Ab, &expand_cd(&map_of(&pv))),
                        )
                        .unwrap();
                    checked += 2;
                    if expand_cd(&map_of(&native)) != map_of(&def) {
                        bad.push(format!("M({u},{v}): cd recursion differs from definition"));
                    }
                    if t.mixing_cd(&pv, &pu).unwrap() != native {
                        bad.push(format!("M({u},{v}) is not symmetric"));
                    }
                }
            }
        }
    }
    for (p, q) in mixing_pairs(0) {
        let (op, oq) = (Ord::from_graded(&p.value), Ord::from_graded(&q.value));
        let expected = int_map(&op.product(&oq).psi());
        let got = t
            .mixing_def(
                &poly(Alphabet::Ab, &int_map(&op.psi())),
                &poly(Alphabet::Ab, &int_map(&oq.psi())),
            )
            .unwrap();
        checked += 1;
        if map_of(&got) != expected {
            bad.push(format!("product {}×{}", p.name, q.name));
        }
    }
    outcome(&bad, checked)
}

fn criterion_5() -> Outcome {
    let mut t = Transforms::new();
    let c = cd("c");
    let mut bad = Vec::new();
    let mut checked = 0;
    for i in 0..=5usize {
        for j in 0..=5usize {
            let m = t.mixing_cd(&c.pow(i), &c.pow(j)).unwrap();
            checked += 2;
            if delannoy_m(i, j) != m {
                bad.push(format!("Delannoy weight at ({i},{j})"));
            }
            // ce-words built from blocks c and ee of total degree i+j+1
            let deg = i + j + 1;
            let mut expected: BTreeMap<String, Rational> = BTreeMap::new();
            let mut words = vec![(String::new(), 0usize, 0i64)];
            while let Some((w, d, r)) = words.pop() {
                if d == deg {
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let v = Rational::new(binom(deg as i64 + 1 - 2 * r, i as i64 + 1 - r) * sign, 2.into());
                    if !v.is_zero() {
                        expected.insert(w, v);
                    }
                    continue;
                }
                words.push((format!("{w}c"), d + 1, r));
                if d + 2 <= deg {
                    words.push((format!("{w}ee"), d + 2, r + 1));
                }
            }
            if map_of(&cd_to_ce(&m).unwrap()) != expected {
                bad.push(format!("ce-coefficients of M(c^{i},c^{j})"));
            }
        }
    }
    let diag = cd("2d-c^2");
    for i in 0..=4usize {
        for j in 0..=4usize {
            let m = |x: usize, y: usize| delannoy_m(x, y);
            let rhs = (m(i, j + 1).try_add(&m(i + 1, j)).unwrap())
                .try_mul(&c)
                .unwrap()
                .try_add(&m(i, j).try_mul(&diag).unwrap())
                .unwrap();
            checked += 1;
            if m(i + 1, j + 1) != rhs {
                bad.push(format!("recurrence at ({i},{j})"));
            }
        }
    }
    outcome(&bad, checked)
}

fn closed_ladder(n: usize) -> BTreeMap<String, Rational> {
    cd_words(n + 1)
        .into_iter()
        .map(|w| {
            let k = ks(&w);
            let r = (k.len() - 1) as u32;
            let v: u64 = 2u64.pow(r) * k[1..].iter().map(|x| x + 1).product::<u64>();
            (w, Rational::from_integer(v.into()))
        })
        .collect()
}

fn closed_ii_ladder(n: usize) -> BTreeMap<String, Rational> {
    cd_words(n)
        .into_iter()
        .map(|w| {
            let k = ks(&w);
            let r = (k.len() - 1) as u32;
            let v: u64 = 2u64.pow(r + 1) * k.iter().map(|x| x + 1).product::<u64>();
            (w, Rational::from_integer(v.into()))
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut t = Transforms::new();
    let c = cd("c");
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 0..=6 {
        checked += 2;
        if map_of(&t.interval_cd(&c.pow(n)).unwrap()) != closed_ladder(n) {
            bad.push(format!("I_cd(c^{n})"));
        }
        if map_of(&t.second_kind_cd(&c.pow(n)).unwrap()) != closed_ii_ladder(n) {
            bad.push(format!("II(c^{n})"));
        }
    }
    for n in 1..=3 {
        let o = Ord::from_graded(&generate(PosetKind::Ladder, n).unwrap());
        checked += 2;
        if int_map(&o.graded_intervals().0.psi()) != expand_cd(&closed_ladder(n)) {
            bad.push(format!("raw interval poset of ladder-{n}"));
        }
        let mut total = BTreeMap::new();
        for (_, m) in oracle_second_kind(&o) {
            add_into(&mut total, &m.psi());
        }
        if int_map(&total) != expand_cd(&closed_ii_ladder(n)) {
            bad.push(format!("raw second-kind transform of ladder-{n}"));
        }
    }
    for n in 0..=8usize {
        let gamma: BigInt = (0..=n / 2)
            .map(|r| {
                let sign = if r % 2 == 0 { 1 } else { -1 };
                BigInt::from(2).pow((n + 1 - 2 * r) as u32) * binom((n - r) as i64, (n - 2 * r) as i64) * sign
            })
            .sum();
        let coeff = t.second_kind_cd(&c.pow(n)).unwrap().coeff(&Word::from("c".repeat(n).as_str()));
        checked += 2;
        if gamma != BigInt::from(2 * (n + 1)) {
            bad.push(format!("gamma_{n} = {gamma}"));
        }
        if coeff != Rational::from_integer(gamma) {
            bad.push(format!("coefficient of c^{n} in II(c^{n}) is {coeff}"));
        }
    }
    checked += 1;
    if t.second_kind_cd(&c.pow(4)).unwrap().coeff(&Word::from("cccc")) != Rational::from_integer(10.into()) {
        bad.push("gamma_4 != 10".into());
    }
    outcome(&bad, checked)
}

fn all_orders(edges: &[(String, String)]) -> Vec<Vec<(String, String)>> {
    if edges.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..edges.len() {
        let mut rest = edges.to_vec();
        let e = rest.remove(i);
        for mut tail in all_orders(&rest) {
            tail.insert(0, e.clone());
            out.push(tail);
        }
    }
    out
}

fn criterion_7() -> (Outcome, String) {
    let t_basis = chebyshev(true, 12);
    let u_basis = chebyshev(false, 12);
    let half = Rational::new(1.into(), 2.into());
    let two = Rational::from_integer(2.into());
    let mut complexes = vec![("figure-1".to_string(), figure_complex())];
    complexes.extend(small_complexes().into_iter().skip(1).map(|c| (c.name, c.value)));
    let (mut bad, mut checked) = (Vec::new(), 0);
    let mut corrected_ok = true;
    for (name, cx) in &complexes {
        let orders = all_orders(&cx.edges());
        let tris: Vec<SimplicialComplex> = orders.iter().map(|o| tchebyshev_triangulation(cx, o).unwrap()).collect();
        checked += 3;
        if tris.iter().any(|x| x.f_vector() != tris[0].f_vector()) {
            bad.push(format!("{name}: f-vector depends on the edge order"));
        }
        let f = f_poly(&cx.f_vector());
        if poly_coeffs(&tris[0]) != cheb_image(&f, &t_basis, 0) {
            bad.push(format!("{name}: F of triangulation != T(F)"));
        }
        let verts: Vec<String> = cx.vertices().iter().cloned().collect();
        let links = second_kind_links(&tris[0], &verts).unwrap();
        let summed = trim(f_poly(&links.f_vector()));
        let literal: Vec<Rational> = cheb_image(&f, &u_basis, 0).iter().map(|c| c * &half).collect();
        if summed != trim(literal) {
            bad.push(format!("{name}: summed link F != U(F)/2"));
        }
        let corrected: Vec<Rational> = cheb_image(&f, &u_basis, -1).iter().map(|c| c * &two).collect();
        corrected_ok &= summed == trim(corrected);
    }
    let note = format!(
        "summed link F equals 2·(x^n -> U_(n-1))(F) on every complex: {}",
        if corrected_ok { "yes" } else { "no" }
    );
    (outcome(&bad, checked), note)
}

fn criterion_8() -> Outcome {
    let mut posets: Vec<(String, Poset)> = corpus::graded_corpus(0)
        .into_iter()
        .filter(|p| p.value.len() <= 8)
        .map(|p| (p.name, p.value.into_poset()))
        .collect();
    posets.extend(corpus::ungraded_posets().into_iter().map(|p| (p.name, p.value)));
    let mut bad = Vec::new();
    for (name, p) in &posets {
        let o = Ord::from_poset(p);
        let (ip, pairs) = o.intervals();
        let rename = |i: usize| {
            let (u, v) = pairs[i];
            if u == v {
                o.labels[u].clone()
            } else {
                midpoint_label(&o.labels[u], &o.labels[v])
            }
        };
        let direct: BTreeSet<Vec<String>> = ip
            .chains(|_| false)
            .into_iter()
            .map(|c| {
                let mut f: Vec<String> = c.into_iter().map(rename).collect();
                f.sort();
                f
            })
            .collect();
        let base = SimplicialComplex::order_complex_of(p).unwrap();
        let tri = tchebyshev_triangulation(&base, &interval_edge_order(p)).unwrap();
        let mut faces: BTreeSet<Vec<String>> = tri.faces().clone();
        faces.insert(vec![]);
        if faces != direct {
            bad.push(name.clone());
        }
    }
    outcome(&bad, posets.len())
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    let l2 = generate(PosetKind::Ladder, 2).unwrap();
    for (support, want) in [(vec!["0", "3"], 3u64), (vec!["0", "-1", "3"], 7)] {
        checked += 1;
        let got = count_chains_with_support(&l2, &support).unwrap();
        if got != want {
            bad.push(format!("ladder-2 support {support:?}: {got}"));
        }
    }
    for p in corpus::graded_posets(0) {
        let o = Ord::from_graded(&p.value);
        let (ip, tags) = o.graded_intervals();
        // interval chains from the empty interval to [0̂,1̂], keyed by endpoint set
        let mut cnt: Vec<HashMap<u32, u64>> = vec![HashMap::new(); ip.len()];
        cnt[0].insert(0, 1);
        for x in ip.by_rank().into_iter().filter(|&x| x != 0) {
            let (u, v) = tags[x].unwrap();
            let bits = 1u32 << u | 1u32 << v;
            let mut here: HashMap<u32, u64> = HashMap::new();
            for y in 0..ip.len() {
                if ip.lt(y, x) {
                    for (&m, &c) in &cnt[y] {
                        *here.entry(m | bits).or_default() += c;
                    }
                }
            }
            cnt[x] = here;
        }
        let top = ip.top();
        let (bot, ptop) = (o.bottom(), o.top());
        for chain in o.chains(|_| false) {
            if chain.first() != Some(&bot) || chain.last() != Some(&ptop) || chain.len() < 2 || chain.len() > 7 {
                continue;
            }
            let m = chain.len() - 1;
            let mask = chain.iter().fold(0u32, |acc, &i| acc | 1 << i);
            let got = cnt[top].get(&mask).copied().unwrap_or(0);
            checked += 1;
            if got != pell(m) + pell(m + 1) {
                bad.push(format!("{}: chain of length {m} has {got}", p.name));
            }
            let labels: Vec<&str> = chain.iter().map(|&i| o.labels[i].as_str()).collect();
            if count_chains_with_support(&p.value, &labels).unwrap() != got {
                bad.push(format!("{}: library count differs on {labels:?}", p.name));
            }
        }
    }
    outcome(&bad, checked)
}

fn cube_lattice(n: usize) -> Ord {
    let mut faces: Vec<String> = vec![String::new()];
    for _ in 0..n {
        faces = faces.iter().flat_map(|f| ["0", "1", "*"].map(|c| format!("{f}{c}"))).collect();
    }
    let stars = |f: &str| f.matches('*').count();
    let mut labels = vec!["∅".to_string()];
    labels.extend(faces.iter().cloned());
    let mut rank = vec![0];
    rank.extend(faces.iter().map(|f| stars(f) + 1));
    let k = labels.len();
    let leq = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    i == 0
                        || (j > 0
                            && faces[i - 1]
                                .chars()
                                .zip(faces[j - 1].chars())
                                .all(|(s, t)| t == '*' || s == t))
                })
                .collect()
        })
        .collect();
    Ord { labels, rank, leq }
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for p in route_corpus(0) {
        let o = Ord::from_graded(&p.value);
        if o.is_eulerian() {
            checked += 1;
            if !o.graded_intervals().0.is_eulerian() {
                bad.push(format!("interval poset of {} is not Eulerian", p.name));
            }
        }
    }
    for n in 1..=4 {
        let o = Ord::from_graded(&generate(PosetKind::Boolean, n).unwrap());
        let (ip, _) = o.graded_intervals();
        let (lo, hi) = (ip.bottom(), ip.top());
        let mut f = vec![0u64; n + 1];
        for c in ip.chains(|i| i == lo || i == hi) {
            f[c.len()] += 1;
        }
        let euler: i64 = f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { -(x as i64) } else { x as i64 }).sum();
        checked += 3;
        if f != TYPE_B_ROWS[n - 1] {
            bad.push(format!("stored row for n = {n} differs from enumeration {f:?}"));
        }
        if type_b_complex(n).f_vector() != f {
            bad.push(format!("library f-vector for n = {n}"));
        }
        if euler != if n % 2 == 1 { 1 } else { -1 } {
            bad.push(format!("reduced Euler characteristic {euler} for n = {n}"));
        }
        if n <= 3 {
            checked += 1;
            if !is_isomorphic_with_cap(&ip.to_poset(), &cube_lattice(n).to_poset(), ISO_CAP).unwrap() {
                bad.push(format!("interval poset of boolean-{n} is not the cube lattice"));
            }
        }
    }
    outcome(&bad, checked)
}

fn criterion_11() -> (Outcome, Vec<String>) {
    let mut t = Transforms::new();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        let psi = poly(Alphabet::Ab, &int_map(&Ord::from_graded(&generate(PosetKind::Boolean, n).unwrap()).psi()));
        let lambda = 1i64 << n;
        checked += 2;
        if t.second_kind_ab(&psi).unwrap() != psi.scale_int(lambda) {
            bad.push(format!("boolean-{n} is not an eigenvector"));
        }
        let lifted = t.lift(&psi).unwrap();
        if t.second_kind_ab(&lifted).unwrap() != lifted.scale_int(lambda) {
            bad.push(format!("lift of the boolean-{n} ab-index is not an eigenvector for {lambda}"));
        }
    }
    for n in 1..=6 {
        for w in Word::all_of_length(Alphabet::Ab, n) {
            let rev: String = w.as_str().chars().rev().collect();
            if w.as_str() < rev.as_str() {
                let asym = NcPoly::word(Alphabet::Ab, w.as_str()).try_sub(&NcPoly::word(Alphabet::Ab, &rev)).unwrap();
                checked += 1;
                if !t.second_kind_ab(&asym).unwrap().is_zero() {
                    bad.push(format!("II({} - {rev}) != 0", w.as_str()));
                }
            }
        }
    }
    let report = eigen_experiments(6).unwrap();
    let dims = report
        .degrees
        .iter()
        .map(|d| format!("n={}: kernel {} vs Asym {}", d.n, d.kernel_dim, d.asym_dim))
        .collect();
    (outcome(&bad, checked), dims)
}

fn criterion_12() -> Outcome {
    let base = corpus::base_posets();
    let mut bad = Vec::new();
    let mut checked = 0;
    for (i, j) in corpus::pairs_under(&base, 24) {
        let (p, q) = (&base[i], &base[j]);
        let (op, oq) = (Ord::from_graded(&p.value), Ord::from_graded(&q.value));
        let prod = op.product(&oq);
        let name = format!("{}×{}", p.name, q.name);
        let iso = |x: &Ord, y: &Ord| is_isomorphic_with_cap(&x.to_poset(), &y.to_poset(), ISO_CAP).unwrap();

        checked += 2;
        if !iso(&prod.intervals().0, &op.intervals().0.product(&oq.intervals().0)) {
            bad.push(format!("{name}: intervals of the product"));
        }
        if !iso(&prod.graded_intervals().0, &op.graded_intervals().0.diamond(&oq.graded_intervals().0)) {
            bad.push(format!("{name}: graded intervals of the product"));
        }

        let sp = oracle_second_kind(&op);
        let sq = oracle_second_kind(&oq);
        let lib = second_kind_transform(&poset_intervals::poset::direct_product(&p.value, &q.value));
        for m in lib.iter() {
            checked += 1;
            let Some((x, y)) = sp
                .iter()
                .flat_map(|a| sq.iter().map(move |b| (a, b)))
                .find(|(a, b)| format!("({},{})", a.0, b.0) == m.generator)
            else {
                bad.push(format!("{name}: unexpected generator {}", m.generator));
                continue;
            };
            if !iso(&Ord::from_graded(&m.poset), &x.1.product(&y.1)) {
                bad.push(format!("{name}: member {}", m.generator));
            }
        }
    }
    outcome(&bad, checked)
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "iota examples", criterion_1()),
        (2, "interval-transform routes", criterion_2()),
        (3, "second-kind routes", criterion_3()),
        (4, "mixing consistency", criterion_4()),
        (5, "Delannoy model", criterion_5()),
        (6, "closed forms", criterion_6()),
    ];
    let (o7, note7) = criterion_7();
    results.push((7, "triangulation invariance", o7));
    results.push((8, "interval order complex", criterion_8()));
    results.push((9, "Pell counts", criterion_9()));
    results.push((10, "Eulerian preservation and type B", criterion_10()));
    let (o11, dims) = criterion_11();
    results.push((11, "eigen structure", o11));
    results.push((12, "product laws", criterion_12()));

    for (k, name, o) in &results {
        println!("{} criterion {k:>2} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if *k == 7 {
            println!("     note: {note7}");
        }
        if *k == 11 {
            println!("     kernel report: {}", dims.join("; "));
        }
    }
    let unexpected: Vec<usize> = results
        .iter()
        .filter(|(k, _, o)| !o.pass && !KNOWN_FALSE.contains(k))
        .map(|(k, _, _)| *k)
        .collect();
    if !unexpected.is_empty() || !note7.ends_with("yes") {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
