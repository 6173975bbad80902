//! Noncommutative polynomials with exact rational coefficients over the
//! alphabets `{a,b}`, `{c,d}` and `{c,e}`.
//!
//! Words are ordered by length, then lexicographically; this is the order
//! used for display and serialization. In the `cd` alphabet the letter `d`
//! has degree 2, every other letter degree 1.

mod convert;
mod coproduct;
pub(crate) mod json;
pub mod linalg;
mod parse;
mod symmetry;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

pub use convert::{cd_to_ce, ce_to_cd, e_square_count, expand, rewrite_ab_to_cd, CdConvention};
pub use coproduct::{coproduct_delta, coproduct_delta_prime, TensorPoly};
pub use json::{PolyJson, TermJson};
pub use symmetry::{asym_basis, asym_dimension, sym_asym_split, sym_dimension, sym_basis};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("no image given for letter `{0}`")]
    MissingImage(char),
    #[error("substitution images do not share one alphabet")]
    MixedImages,
    #[error("polynomial is not expressible in c and d: stuck at word `{0}`")]
    NotExpressible(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("word `{0}` contains an odd run of e")]
    OddEPower(String),
    #[error("coproduct leaves the cd-span")]
    NotCoalgebraElement,
    #[error("operation not defined on the {0} alphabet")]
    UnsupportedAlphabet(Alphabet),
    #[error("letter `{0}` is not in the {1} alphabet")]
    BadLetter(char, Alphabet),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    Ab,
    Cd,
    Ce,
}

impl Alphabet {
    pub fn letters(self) -> [u8; 2] {
        match self {
            Alphabet::Ab => [b'a', b'b'],
            Alphabet::Cd => [b'c', b'd'],
            Alphabet::Ce => [b'c', b'e'],
        }
    }

    pub fn contains(self, letter: u8) -> bool {
        self.letters().contains(&letter)
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Ab => "ab",
            Alphabet::Cd => "cd",
            Alphabet::Ce => "ce",
        }
    }

    pub fn from_name(s: &str) -> Option<Alphabet> {
        match s {
            "ab" => Some(Alphabet::Ab),
            "cd" => Some(Alphabet::Cd),
            "ce" => Some(Alphabet::Ce),
            _ => None,
        }
    }

    /// Alphabet owning a letter; `c` is reported as `cd`.
    pub fn of_letter(letter: u8) -> Option<Alphabet> {
        match letter {
            b'a' | b'b' => Some(Alphabet::Ab),
            b'c' | b'd' => Some(Alphabet::Cd),
            b'e' => Some(Alphabet::Ce),
            _ => None,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<u8>>) -> Word {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree with `d` counted twice.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&l| if l == b'd' { 2 } else { 1 }).sum()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ascii letters")
    }

    /// All words of the given length over an alphabet, in canonical order.
    pub fn all_of_length(alphabet: Alphabet, len: usize) -> Vec<Word> {
        let [x, y] = alphabet.letters();
        (0..1usize << len)
            .map(|m| {
                Word(
                    (0..len)
                        .map(|i| if m >> (len - 1 - i) & 1 == 0 { x } else { y })
                        .collect(),
                )
            })
            .collect()
    }

    /// All cd-words of the given degree, in canonical order.
    pub fn cd_words_of_degree(deg: usize) -> Vec<Word> {
        fn go(rest: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
            if rest == 0 {
                out.push(Word(cur.clone()));
                return;
            }
            cur.push(b'c');
            go(rest - 1, cur, out);
            cur.pop();
            if rest >= 2 {
                cur.push(b'd');
                go(rest - 2, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(deg, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Word {
        Word(s.as_bytes().to_vec())
    }
}

/// A polynomial over one alphabet; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> NcPoly {
        NcPoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet) -> NcPoly {
        NcPoly::monomial(alphabet, Word::empty(), Rational::one())
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: Rational) -> NcPoly {
        let mut p = NcPoly::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    /// A single word with coefficient one; panics on letters outside the alphabet.
    pub fn word(alphabet: Alphabet, letters: &str) -> NcPoly {
        for ch in letters.bytes() {
            assert!(alphabet.contains(ch), "letter {} not in {alphabet}", ch as char);
        }
        NcPoly::monomial(alphabet, Word::from(letters), Rational::one())
    }

    /// Parses text such as `a^2+2ba` or `3/2 c^2 - 1/2 e^2`.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<NcPoly, PolyError> {
        parse::parse(alphabet, text)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, letters: &str) -> Rational {
        self.coeff(&Word::from(letters))
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(word.letters().iter().all(|&l| self.alphabet.contains(l)));
        match self.terms.get_mut(&word) {
            Some(e) => {
                *e += coeff;
                if e.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    /// Adds `coeff * other` into `self`.
    pub fn add_scaled(&mut self, other: &NcPoly, coeff: &Rational) {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        if coeff.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            let v = c * coeff;
            match self.terms.get_mut(w) {
                Some(e) => {
                    *e += v;
                    if e.is_zero() {
                        self.terms.remove(w);
                    }
                }
                None => {
                    self.terms.insert(w.clone(), v);
                }
            }
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check(other)?;
        let mut out = NcPoly::zero(self.alphabet);
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                out.add_term(u.concat(v), x * y);
            }
        }
        Ok(out)
    }

    fn check(&self, other: &NcPoly) -> Result<(), PolyError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(PolyError::AlphabetMismatch(self.alphabet, other.alphabet))
        }
    }

    pub fn scale(&self, r: &Rational) -> NcPoly {
        let mut out = NcPoly::zero(self.alphabet);
        out.add_scaled(self, r);
        out
    }

    pub fn scale_int(&self, k: i64) -> NcPoly {
        self.scale(&Rational::from_integer(k.into()))
    }

    pub fn pow(&self, k: usize) -> NcPoly {
        let mut out = NcPoly::one(self.alphabet);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Word-wise reversal.
    pub fn reverse_star(&self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.clone()))
                .collect(),
        }
    }

    /// The common degree of all terms, `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>, PolyError> {
        let mut degs = self.terms.keys().map(Word::degree);
        let Some(first) = degs.next() else {
            return Ok(None);
        };
        if degs.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(PolyError::NotHomogeneous)
        }
    }

    /// Highest degree of any term (0 for the zero polynomial).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    /// The algebra homomorphism sending each letter to its image.
    pub fn substitute(&self, images: &BTreeMap<char, NcPoly>) -> Result<NcPoly, PolyError> {
        let target = match images.values().next() {
            Some(p) => p.alphabet,
            None => self.alphabet,
        };
        if images.values().any(|p| p.alphabet != target) {
            return Err(PolyError::MixedImages);
        }
        for l in self.alphabet.letters() {
            let used = self.terms.keys().any(|w| w.letters().contains(&l));
            if used && !images.contains_key(&(l as char)) {
                return Err(PolyError::MissingImage(l as char));
            }
        }
        let mut cache: BTreeMap<Word, NcPoly> = BTreeMap::new();
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let img = image_of_word(w, images, target, &mut cache);
            out.add_scaled(&img, c);
        }
        Ok(out)
    }
}

fn image_of_word(
    w: &Word,
    images: &BTreeMap<char, NcPoly>,
    target: Alphabet,
    cache: &mut BTreeMap<Word, NcPoly>,
) -> NcPoly {
    if w.is_empty() {
        return NcPoly::one(target);
    }
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let head = w.slice(0, w.len() - 1);
    let last = w.letters()[w.len() - 1] as char;
    let p = &image_of_word(&head, images, target, cache) * &images[&last];
    cache.insert(w.clone(), p.clone());
    p
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.try_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: NcPoly) -> NcPoly {
        &self + &rhs
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.try_sub(rhs).expect("alphabet mismatch in -")
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: NcPoly) -> NcPoly {
        &self - &rhs
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.try_mul(rhs).expect("alphabet mismatch in *")
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: NcPoly) -> NcPoly {
        &self * &rhs
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale_int(-1)
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_poly(f, self)
    }
}

/// Shorthand for an exact rational `n / d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> NcPoly {
        NcPoly::parse(Alphabet::Ab, s).unwrap()
    }

    #[test]
    fn noncommutative_products() {
        let a = NcPoly::word(Alphabet::Ab, "a");
        let b = NcPoly::word(Alphabet::Ab, "b");
        assert_ne!(&a * &b, &b * &a);
        let c = &a + &b;
        assert_eq!(&c * &c, ab("a^2+ab+ba+b^2"));
        let one = NcPoly::one(Alphabet::Ab);
        assert_eq!(&one * &c, c);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = ab("ab+ba");
        let d = &p - &p;
        assert!(d.is_zero());
        let mut r = ab("a");
        r.add_term(Word::from("b"), q(1, 1));
        r.add_term(Word::from("a"), q(-1, 1));
        assert_eq!(r, ab("b"));
    }

    #[test]
    fn alphabet_mismatch() {
        let x = NcPoly::word(Alphabet::Ab, "a");
        let y = NcPoly::word(Alphabet::Cd, "c");
        assert_eq!(
            x.try_add(&y),
            Err(PolyError::AlphabetMismatch(Alphabet::Ab, Alphabet::Cd))
        );
        assert!(x.try_mul(&y).is_err());
    }

    #[test]
    fn reversal() {
        assert_eq!(ab("ab").reverse_star(), ab("ba"));
        assert_eq!(ab("a^2b").reverse_star(), ab("ba^2"));
        let p = ab("2aab - 1/3 bab + ab");
        assert_eq!(p.reverse_star().reverse_star(), p);
        let r = ab("a+2ab");
        assert_eq!((&p * &r).reverse_star(), &r.reverse_star() * &p.reverse_star());
    }

    #[test]
    fn substitution() {
        let mut img = BTreeMap::new();
        img.insert('a', ab("a-b"));
        img.insert('b', ab("b"));
        assert_eq!(ab("a+2b").substitute(&img).unwrap(), ab("a+b"));
        let mut cd = BTreeMap::new();
        cd.insert('c', ab("a+b"));
        cd.insert('d', ab("ab+ba"));
        let p = NcPoly::parse(Alphabet::Cd, "c^2+d").unwrap();
        assert_eq!(p.substitute(&cd).unwrap(), ab("a^2+2ab+2ba+b^2"));
        let mut ce = BTreeMap::new();
        ce.insert('e', ab("a-b"));
        let e2 = NcPoly::parse(Alphabet::Ce, "e^2").unwrap();
        assert_eq!(e2.substitute(&ce).unwrap(), ab("a^2-ab-ba+b^2"));
        let c = NcPoly::parse(Alphabet::Ce, "c e").unwrap();
        assert_eq!(c.substitute(&ce), Err(PolyError::MissingImage('c')));
    }

    #[test]
    fn cd_words_enumeration() {
        let ws: Vec<String> = Word::cd_words_of_degree(4)
            .iter()
            .map(|w| w.as_str().to_string())
            .collect();
        assert_eq!(ws, vec!["dd", "ccd", "cdc", "dcc", "cccc"]);
        assert_eq!(Word::all_of_length(Alphabet::Ab, 2).len(), 4);
    }

    #[test]
    fn homogeneity() {
        assert_eq!(ab("ab+ba").homogeneous_degree(), Ok(Some(2)));
        assert_eq!(ab("a+ba").homogeneous_degree(), Err(PolyError::NotHomogeneous));
        let cd = NcPoly::parse(Alphabet::Cd, "c^2+d").unwrap();
        assert_eq!(cd.homogeneous_degree(), Ok(Some(2)));
    }
}
