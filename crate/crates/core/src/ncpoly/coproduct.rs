use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::parse::format_word;
use super::{expand, rewrite_ab_to_cd, Alphabet, CdConvention, NcPoly, PolyError, Word};
use crate::Rational;

/// A finite linear combination of word pairs `u ⊗ v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    alphabet: Alphabet,
    terms: BTreeMap<(Word, Word), Rational>,
}

impl TensorPoly {
    pub fn zero(alphabet: Alphabet) -> TensorPoly {
        TensorPoly {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &str, right: &str) -> Rational {
        self.terms
            .get(&(Word::from(left), Word::from(right)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += coeff;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Builds `Σ c · left ⊗ right` from a list of polynomial pairs.
    pub fn from_pairs(alphabet: Alphabet, pairs: &[(NcPoly, NcPoly)]) -> TensorPoly {
        let mut t = TensorPoly::zero(alphabet);
        for (l, r) in pairs {
            for (u, x) in l.terms() {
                for (v, y) in r.terms() {
                    t.add_term(u.clone(), v.clone(), x * y);
                }
            }
        }
        t
    }

    /// Applies linear maps on each side; the results share one alphabet.
    pub fn map_sides(
        &self,
        alphabet: Alphabet,
        mut left: impl FnMut(&Word) -> NcPoly,
        mut right: impl FnMut(&Word) -> NcPoly,
    ) -> TensorPoly {
        let mut out = TensorPoly::zero(alphabet);
        for ((u, v), c) in &self.terms {
            let (l, r) = (left(u), right(v));
            for (x, p) in l.terms() {
                for (y, s) in r.terms() {
                    out.add_term(x.clone(), y.clone(), c * p * s);
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((u, v), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a} ")?;
            }
            write!(f, "{}⊗{}", format_word(u), format_word(v))?;
        }
        Ok(())
    }
}

/// The letter-deletion coproduct. A cd-polynomial is expanded to ab-words,
/// the coproduct taken there, and both tensor factors rewritten in c and d.
pub fn coproduct_delta(p: &NcPoly) -> Result<TensorPoly, PolyError> {
    match p.alphabet() {
        Alphabet::Ab => Ok(delta_ab(p, |_| true)),
        Alphabet::Cd => {
            let t = delta_ab(&expand(p, CdConvention::Psi), |_| true);
            regroup_cd(&t)
        }
        Alphabet::Ce => Err(PolyError::UnsupportedAlphabet(Alphabet::Ce)),
    }
}

/// The coproduct breaking only at letters `b`: each occurrence of `b` is
/// deleted in turn, the prefix going left and the suffix right.
pub fn coproduct_delta_prime(p: &NcPoly) -> Result<TensorPoly, PolyError> {
    if p.alphabet() != Alphabet::Ab {
        return Err(PolyError::UnsupportedAlphabet(p.alphabet()));
    }
    Ok(delta_ab(p, |l| l == b'b'))
}

fn delta_ab(p: &NcPoly, breaks: impl Fn(u8) -> bool) -> TensorPoly {
    let mut t = TensorPoly::zero(Alphabet::Ab);
    for (w, c) in p.terms() {
        for (i, &l) in w.letters().iter().enumerate() {
            if breaks(l) {
                t.add_term(w.slice(0, i), w.slice(i + 1, w.len()), c.clone());
            }
        }
    }
    t
}

/// Rewrites an ab⊗ab tensor as cd⊗cd, failing if it is outside that span.
fn regroup_cd(t: &TensorPoly) -> Result<TensorPoly, PolyError> {
    let lift = |e: PolyError| match e {
        PolyError::NotExpressible(_) | PolyError::NotHomogeneous => PolyError::NotCoalgebraElement,
        other => other,
    };
    let mut by_right: BTreeMap<Word, NcPoly> = BTreeMap::new();
    for ((u, v), c) in t.terms() {
        by_right
            .entry(v.clone())
            .or_insert_with(|| NcPoly::zero(Alphabet::Ab))
            .add_term(u.clone(), c.clone());
    }
    let mut by_left: BTreeMap<Word, NcPoly> = BTreeMap::new();
    for (v, left) in by_right {
        let left_cd = rewrite_ab_to_cd(&left, CdConvention::Psi).map_err(lift)?;
        for (x, c) in left_cd.terms() {
            by_left
                .entry(x.clone())
                .or_insert_with(|| NcPoly::zero(Alphabet::Ab))
                .add_term(v.clone(), c.clone());
        }
    }
    let mut out = TensorPoly::zero(Alphabet::Cd);
    for (x, right) in by_left {
        let right_cd = rewrite_ab_to_cd(&right, CdConvention::Psi).map_err(lift)?;
        for (y, c) in right_cd.terms() {
            out.add_term(x.clone(), y.clone(), c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::q;

    fn ab(s: &str) -> NcPoly {
        NcPoly::parse(Alphabet::Ab, s).unwrap()
    }
    fn cd(s: &str) -> NcPoly {
        NcPoly::parse(Alphabet::Cd, s).unwrap()
    }
    fn tensor(alpha: Alphabet, items: &[(i64, &str, &str)]) -> TensorPoly {
        let mut t = TensorPoly::zero(alpha);
        for &(c, l, r) in items {
            let l = if l == "1" { "" } else { l };
            let r = if r == "1" { "" } else { r };
            t.add_term(Word::from(l), Word::from(r), q(c, 1));
        }
        t
    }

    #[test]
    fn delta_on_words() {
        let t = coproduct_delta(&ab("ab")).unwrap();
        assert_eq!(t, tensor(Alphabet::Ab, &[(1, "1", "b"), (1, "a", "1")]));
        assert_eq!(t.to_string(), "1⊗b + a⊗1");
    }

    #[test]
    fn delta_on_cd() {
        let t = coproduct_delta(&cd("c")).unwrap();
        assert_eq!(t, tensor(Alphabet::Cd, &[(2, "1", "1")]));
        let t = coproduct_delta(&cd("c^2")).unwrap();
        assert_eq!(t, tensor(Alphabet::Cd, &[(2, "1", "c"), (2, "c", "1")]));
        let t = coproduct_delta(&cd("d")).unwrap();
        assert_eq!(t, tensor(Alphabet::Cd, &[(1, "1", "c"), (1, "c", "1")]));
    }

    #[test]
    fn delta_prime_breaks_at_b() {
        assert!(coproduct_delta_prime(&ab("aaa")).unwrap().is_zero());
        assert_eq!(
            coproduct_delta_prime(&ab("ab")).unwrap(),
            tensor(Alphabet::Ab, &[(1, "a", "1")])
        );
        assert_eq!(
            coproduct_delta_prime(&ab("bb")).unwrap(),
            tensor(Alphabet::Ab, &[(1, "1", "b"), (1, "b", "1")])
        );
        assert_eq!(
            coproduct_delta_prime(&ab("abab")).unwrap(),
            tensor(Alphabet::Ab, &[(1, "a", "ab"), (1, "aba", "1")])
        );
    }

    #[test]
    fn coassociative_on_short_words() {
        for n in 0..=5 {
            for w in Word::all_of_length(Alphabet::Ab, n) {
                let p = NcPoly::monomial(Alphabet::Ab, w, q(1, 1));
                let d = coproduct_delta(&p).unwrap();
                // (Δ⊗id)Δ and (id⊗Δ)Δ as triple sums
                let mut left: BTreeMap<(Word, Word, Word), Rational> = BTreeMap::new();
                let mut right = left.clone();
                for ((u, v), c) in d.terms() {
                    let du = coproduct_delta(&NcPoly::monomial(Alphabet::Ab, u.clone(), c.clone())).unwrap();
                    for ((x, y), k) in du.terms() {
                        *left.entry((x.clone(), y.clone(), v.clone())).or_default() += k;
                    }
                    let dv = coproduct_delta(&NcPoly::monomial(Alphabet::Ab, v.clone(), c.clone())).unwrap();
                    for ((x, y), k) in dv.terms() {
                        *right.entry((u.clone(), x.clone(), y.clone())).or_default() += k;
                    }
                }
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn ce_not_supported() {
        let p = NcPoly::word(Alphabet::Ce, "e");
        assert_eq!(
            coproduct_delta(&p),
            Err(PolyError::UnsupportedAlphabet(Alphabet::Ce))
        );
    }
}
