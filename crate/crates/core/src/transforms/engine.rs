use std::collections::HashMap;

use num_traits::One;

use super::TransformError;
use crate::ncpoly::{Alphabet, NcPoly, PolyError, Word};
use crate::Rational;

/// Memo tables for the recursive operators.
#[derive(Debug, Default)]
pub struct Transforms {
    iota: HashMap<Word, NcPoly>,
    interval_ab: HashMap<Word, NcPoly>,
    interval_cd: HashMap<Word, NcPoly>,
    mixing_ab: HashMap<(u8, u8, Word, Word), NcPoly>,
    mixing_cd: HashMap<(Word, Word), NcPoly>,
}

fn w(alpha: Alphabet, word: &Word) -> NcPoly {
    NcPoly::monomial(alpha, word.clone(), Rational::one())
}

fn lit(alpha: Alphabet, s: &str) -> NcPoly {
    NcPoly::parse(alpha, s).expect("static polynomial")
}

fn require(p: &NcPoly, alpha: Alphabet) -> Result<(), TransformError> {
    if p.alphabet() == alpha {
        Ok(())
    } else {
        Err(PolyError::UnsupportedAlphabet(p.alphabet()).into())
    }
}

/// Letter-deletion coproduct of a single ab-word.
fn split_ab(u: &Word) -> impl Iterator<Item = (Word, Word)> + '_ {
    (0..u.len()).map(move |i| (u.slice(0, i), u.slice(i + 1, u.len())))
}

/// The same coproduct written natively in c and d: it is a derivation for
/// concatenation with `Δc = 2·1⊗1` and `Δd = c⊗1 + 1⊗c`.
pub(crate) fn split_cd(u: &Word) -> Vec<(Word, Word, Rational)> {
    let c = Word::from("c");
    let mut out = Vec::new();
    for i in 0..u.len() {
        let (pre, post) = (u.slice(0, i), u.slice(i + 1, u.len()));
        if u.letters()[i] == b'c' {
            out.push((pre, post, Rational::from_integer(2.into())));
        } else {
            out.push((pre.concat(&c), post.clone(), Rational::one()));
            out.push((pre, c.concat(&post), Rational::one()));
        }
    }
    out
}

impl Transforms {
    pub fn new() -> Self {
        Self::default()
    }

    fn linear(
        &mut self,
        p: &NcPoly,
        alpha: Alphabet,
        out_alpha: Alphabet,
        mut f: impl FnMut(&mut Self, &Word) -> NcPoly,
    ) -> Result<NcPoly, TransformError> {
        require(p, alpha)?;
        let mut out = NcPoly::zero(out_alpha);
        for (word, c) in p.terms() {
            let img = f(self, word);
            out.add_scaled(&img, c);
        }
        Ok(out)
    }

    pub fn iota(&mut self, p: &NcPoly) -> Result<NcPoly, TransformError> {
        self.linear(p, Alphabet::Ab, Alphabet::Ab, |t, word| t.iota_word(word))
    }

    /// ι on one ab-word, by the position of its first and last `b`.
    pub fn iota_word(&mut self, u: &Word) -> NcPoly {
        if let Some(v) = self.iota.get(u) {
            return v.clone();
        }
        let ab = Alphabet::Ab;
        let l = u.letters();
        let n = l.len();
        let a_pow = |k: usize| w(ab, &Word::new(vec![b'a'; k]));
        let head = lit(ab, "a+2b");
        let b = lit(ab, "b");
        let bs: Vec<usize> = (0..n).filter(|&k| l[k] == b'b').collect();
        let out = match bs.as_slice() {
            [] => &head * &a_pow(n),
            [i] => {
                let (i, j) = (*i, n - 1 - i);
                let sum = &(&(&a_pow(i) * &b) * &a_pow(j)) + &(&(&a_pow(j) * &b) * &a_pow(i));
                &(&head * &sum) + &(&b * &a_pow(i + j + 1))
            }
            [first, .., last] => {
                let (i, j) = (*first, n - 1 - last);
                let left = self.iota_word(&u.slice(0, *last));
                let right = self.iota_word(&u.slice(i + 1, n));
                let mid = self.iota_word(&u.slice(i + 1, *last));
                &(&(&left * &(&b * &a_pow(j))) + &(&right * &(&b * &a_pow(i))))
                    + &(&mid * &(&b * &a_pow(i + j + 1)))
            }
        };
        self.iota.insert(u.clone(), out.clone());
        out
    }

    pub fn interval_ab(&mut self, p: &NcPoly) -> Result<NcPoly, TransformError> {
        self.linear(p, Alphabet::Ab, Alphabet::Ab, |t, word| t.interval_ab_word(word))
    }

    /// I on one ab-word, peeling off the last letter. `I(1) = a + b`, the
    /// ab-index of the interval poset of a rank-one chain.
    pub fn interval_ab_word(&mut self, word: &Word) -> NcPoly {
        if let Some(v) = self.interval_ab.get(word) {
            return v.clone();
        }
        let ab = Alphabet::Ab;
        let out = if word.is_empty() {
            lit(ab, "a+b")
        } else {
            let n = word.len();
            let (u, x) = (word.slice(0, n - 1), word.letters()[n - 1]);
            let mid = if x == b'a' { lit(ab, "ab") } else { lit(ab, "ba") };
            let mut out = &self.interval_ab_word(&u) * &w(ab, &Word::new(vec![x]));
            out = &out + &(&lit(ab, "ab+ba") * &w(ab, &u.reversed()));
            for (u1, u2) in split_ab(&u) {
                let t = &(&self.interval_ab_word(&u2) * &mid) * &w(ab, &u1.reversed());
                out = &out + &t;
            }
            out
        };
        self.interval_ab.insert(word.clone(), out.clone());
        out
    }

    pub fn interval_cd(&mut self, p: &NcPoly) -> Result<NcPoly, TransformError> {
        self.linear(p, Alphabet::Cd, Alphabet::Cd, |t, word| t.interval_cd_word(word))
    }

    /// I on one cd-word. In the `c` step the Sweedler term carries `d`,
    /// which is what the ab recursion gives for `I(ua) + I(ub)`.
    pub fn interval_cd_word(&mut self, word: &Word) -> NcPoly {
        if let Some(v) = self.interval_cd.get(word) {
            return v.clone();
        }
        let cd = Alphabet::Cd;
        let c = lit(cd, "c");
        let d = lit(cd, "d");
        let out = if word.is_empty() {
            c
        } else {
            let n = word.len();
            let u = word.slice(0, n - 1);
            let us = w(cd, &u.reversed());
            let mut out;
            if word.letters()[n - 1] == b'c' {
                out = &self.interval_cd_word(&u) * &c;
                out = &out + &(&d * &us).scale_int(2);
                for (u1, u2, k) in split_cd(&u) {
                    let t = &(&self.interval_cd_word(&u2) * &d) * &w(cd, &u1.reversed());
                    out.add_scaled(&t, &k);
                }
            } else {
                out = &self.interval_cd_word(&u) * &d;
                out = &out + &(&lit(cd, "dc+cd") * &us);
                out = &out + &(&(&d * &us) * &c);
                for (u1, u2, k) in split_cd(&u) {
                    let u1s = u1.reversed();
                    let pyr = self.mixing_cd_words(&Word::empty(), &u1s);
                    let t = &(&self.interval_cd_word(&u2) * &d) * &pyr;
                    out.add_scaled(&t, &k);
                    let t = &(&(&d * &w(cd, &u2.reversed())) * &d) * &w(cd, &u1s);
                    out.add_scaled(&t, &k);
                }
            }
            out
        };
        self.interval_cd.insert(word.clone(), out.clone());
        out
    }

    /// Bilinear extension of [`Transforms::mixing_ab_words`] or
    /// [`Transforms::mixing_cd_words`], chosen by the input alphabet.
    pub fn mixing(&mut self, u: &NcPoly, v: &NcPoly) -> Result<NcPoly, TransformError> {
        match u.alphabet() {
            Alphabet::Ab => self.mixing_def(u, v),
            Alphabet::Cd => self.mixing_cd(u, v),
            Alphabet::Ce => Err(PolyError::UnsupportedAlphabet(Alphabet::Ce).into()),
        }
    }

    pub fn mixing_def(&mut self, u: &NcPoly, v: &NcPoly) -> Result<NcPoly, TransformError> {
        self.bilinear(u, v, Alphabet::Ab, |t, x, y| t.mixing_ab_words(x, y))
    }

    pub fn mixing_cd(&mut self, u: &NcPoly, v: &NcPoly) -> Result<NcPoly, TransformError> {
        self.bilinear(u, v, Alphabet::Cd, |t, x, y| t.mixing_cd_words(x, y))
    }

    fn bilinear(
        &mut self,
        u: &NcPoly,
        v: &NcPoly,
        alpha: Alphabet,
        mut f: impl FnMut(&mut Self, &Word, &Word) -> NcPoly,
    ) -> Result<NcPoly, TransformError> {
        require(u, alpha)?;
        require(v, alpha)?;
        let mut out = NcPoly::zero(alpha);
        for (x, cx) in u.terms() {
            for (y, cy) in v.terms() {
                let img = f(self, x, y);
                out.add_scaled(&img, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// The mixing operator on ab-words: the sum of the four parts `G(r,s)`,
    /// where `r` says which argument supplies the first piece and `s` the last.
    /// Pieces of `u` are followed by `a` and pieces of `v` by `b`.
    pub fn mixing_ab_words(&mut self, u: &Word, v: &Word) -> NcPoly {
        let mut out = NcPoly::zero(Alphabet::Ab);
        for r in 1..=2 {
            for s in 1..=2 {
                out = &out + &self.mixing_part(r, s, u, v);
            }
        }
        out
    }

    fn mixing_part(&mut self, r: u8, s: u8, u: &Word, v: &Word) -> NcPoly {
        let key = (r, s, u.clone(), v.clone());
        if let Some(p) = self.mixing_ab.get(&key) {
            return p.clone();
        }
        let ab = Alphabet::Ab;
        let mut out = NcPoly::zero(ab);
        if r == 1 {
            if s == 2 {
                out.add_term(u.concat(&Word::from("a")).concat(v), Rational::one());
            }
            for (u1, u2) in split_ab(u) {
                let rest = self.mixing_part(2, s, &u2, v);
                out = &out + &(&w(ab, &u1.concat(&Word::from("a"))) * &rest);
            }
        } else {
            if s == 1 {
                out.add_term(v.concat(&Word::from("b")).concat(u), Rational::one());
            }
            for (v1, v2) in split_ab(v) {
                let rest = self.mixing_part(1, s, u, &v2);
                out = &out + &(&w(ab, &v1.concat(&Word::from("b"))) * &rest);
            }
        }
        self.mixing_ab.insert(key, out.clone());
        out
    }

    /// The mixing operator on cd-words, recursing on the last letter of the
    /// second argument; `M(u, 1) = M(1, u)` and `M(1, 1) = c`.
    pub fn mixing_cd_words(&mut self, u: &Word, v: &Word) -> NcPoly {
        let key = (u.clone(), v.clone());
        if let Some(p) = self.mixing_cd.get(&key) {
            return p.clone();
        }
        let cd = Alphabet::Cd;
        let c = lit(cd, "c");
        let d = lit(cd, "d");
        let out = if v.is_empty() {
            if u.is_empty() {
                c
            } else {
                self.mixing_cd_words(&Word::empty(), u)
            }
        } else {
            let n = v.len();
            let v0 = v.slice(0, n - 1);
            let vd = &w(cd, &v0) * &d;
            let mut out;
            if v.letters()[n - 1] == b'c' {
                out = &vd * &w(cd, u);
                out = &out + &(&self.mixing_cd_words(u, &v0) * &c);
                for (u1, u2, k) in split_cd(u) {
                    let t = &(&self.mixing_cd_words(&u1, &v0) * &d) * &w(cd, &u2);
                    out.add_scaled(&t, &k);
                }
            } else {
                let pyr_u = self.mixing_cd_words(&Word::empty(), u);
                out = &vd * &pyr_u;
                out = &out + &(&self.mixing_cd_words(u, &v0) * &d);
                for (u1, u2, k) in split_cd(u) {
                    let pyr = self.mixing_cd_words(&Word::empty(), &u2);
                    let t = &(&self.mixing_cd_words(&u1, &v0) * &d) * &pyr;
                    out.add_scaled(&t, &k);
                }
            }
            out
        };
        self.mixing_cd.insert(key, out.clone());
        out
    }

    /// `M(1, u)`: the effect of taking the product with a rank-one chain.
    pub fn pyr(&mut self, u: &NcPoly) -> Result<NcPoly, TransformError> {
        let one = NcPoly::one(u.alphabet());
        self.mixing(&one, u)
    }

    pub fn lift(&mut self, u: &NcPoly) -> Result<NcPoly, TransformError> {
        require(u, Alphabet::Ab)?;
        let e = lit(Alphabet::Ab, "a-b");
        Ok(&(&e * u) + &(u * &e))
    }

    pub fn second_kind_ab(&mut self, p: &NcPoly) -> Result<NcPoly, TransformError> {
        self.linear(p, Alphabet::Ab, Alphabet::Ab, |t, word| {
            let ab = Alphabet::Ab;
            let mut out = &w(ab, word) + &w(ab, &word.reversed());
            for (u1, u2) in split_ab(word) {
                out = &out + &t.mixing_ab_words(&u1.reversed(), &u2);
            }
            out
        })
    }

    pub fn second_kind_cd(&mut self, p: &NcPoly) -> Result<NcPoly, TransformError> {
        self.linear(p, Alphabet::Cd, Alphabet::Cd, |t, word| {
            let cd = Alphabet::Cd;
            let mut out = &w(cd, word) + &w(cd, &word.reversed());
            for (u1, u2, k) in split_cd(word) {
                let m = t.mixing_cd_words(&u1.reversed(), &u2);
                out.add_scaled(&m, &k);
            }
            out
        })
    }
}
