use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{delannoy_m, TransformError, Transforms};
use crate::ncpoly::{cd_to_ce, e_square_count, expand, rewrite_ab_to_cd, Alphabet, CdConvention, NcPoly, Word};
use crate::Rational;

/// The cd-monomial `c^{k_0} d c^{k_1} d ... d c^{k_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KVector {
    ks: Vec<usize>,
}

impl KVector {
    /// `ks` holds `k_0, ..., k_r`; an empty list is read as `(0)`.
    pub fn new(ks: Vec<usize>) -> KVector {
        if ks.is_empty() {
            KVector { ks: vec![0] }
        } else {
            KVector { ks }
        }
    }

    /// Number of `d`s.
    pub fn r(&self) -> usize {
        self.ks.len() - 1
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn degree(&self) -> usize {
        2 * self.r() + self.ks.iter().sum::<usize>()
    }

    pub fn to_word(&self) -> Word {
        let mut out = Vec::new();
        for (i, &k) in self.ks.iter().enumerate() {
            if i > 0 {
                out.push(b'd');
            }
            out.extend(std::iter::repeat_n(b'c', k));
        }
        Word::new(out)
    }

    /// Reads a cd-word; `None` for any other letter.
    pub fn from_word(w: &Word) -> Option<KVector> {
        let mut ks = vec![0];
        for &l in w.letters() {
            match l {
                b'c' => *ks.last_mut().unwrap() += 1,
                b'd' => ks.push(0),
                _ => return None,
            }
        }
        Some(KVector { ks })
    }
}

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

fn check_degree(expected: usize, got: usize) -> Result<(), TransformError> {
    if expected == got {
        Ok(())
    } else {
        Err(TransformError::DegreeMismatch { expected, got })
    }
}

/// Coefficient of the monomial in `I(c^n)`: `2^r (k_1+1)...(k_r+1)`, for
/// monomials of degree `n + 1`.
pub fn ladder_cd_coefficient(k: &KVector, n: usize) -> Result<BigInt, TransformError> {
    check_degree(n + 1, k.degree())?;
    Ok(k.ks[1..].iter().fold(pow2(k.r()), |acc, &x| acc * (x + 1)))
}

/// Coefficient of the monomial in `II(c^n)`: `2^{r+1} (k_0+1)...(k_r+1)`,
/// for monomials of degree `n`.
pub fn ii_ladder_cd_coefficient(k: &KVector, n: usize) -> Result<BigInt, TransformError> {
    check_degree(n, k.degree())?;
    Ok(k.ks.iter().fold(pow2(k.r() + 1), |acc, &x| acc * (x + 1)))
}

/// Coefficient in the ce-form of `II(c^n)` of any word with `r` blocks
/// `e^2`: `(-1)^r 2^{n+1-2r}`.
pub fn uce_coefficient(n: usize, r: usize) -> Result<BigInt, TransformError> {
    if 2 * r > n {
        return Err(TransformError::DegreeMismatch { expected: n, got: 2 * r });
    }
    let v = pow2(n + 1 - 2 * r);
    Ok(if r % 2 == 1 { -v } else { v })
}

/// Coefficient of `c^n` in `II(c^n)`, summed from the ce-form: each word
/// with `r` blocks `e^2` contributes its coefficient times one.
pub fn gamma(n: usize) -> BigInt {
    (0..=n / 2)
        .map(|r| {
            let words = binomial(BigInt::from(n - r), BigInt::from(n - 2 * r));
            uce_coefficient(n, r).expect("2r <= n") * words
        })
        .sum()
}

pub fn gamma_closed_form(n: usize) -> BigInt {
    BigInt::from(2 * (n + 1))
}

/// Coefficient in the ce-form of `M(c^i, c^j)` of a word with `r` blocks
/// `e^2`: `(-1)^r/2 · C(i+j+2-2r, i+1-r)`, zero when no such word exists.
pub fn mcce_coefficient(i: usize, j: usize, r: usize) -> Rational {
    if 2 * r > i + j + 1 || r > i + 1 {
        return Rational::zero();
    }
    let b = binomial(BigInt::from(i + j + 2 - 2 * r), BigInt::from(i + 1 - r));
    let sign = if r % 2 == 1 { -1 } else { 1 };
    Rational::new(b * sign, BigInt::from(2))
}

/// A word whose computed coefficient differs from the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub word: String,
    pub expected: String,
    pub actual: String,
}

fn compare(
    p: &NcPoly,
    words: Vec<Word>,
    mut expected: impl FnMut(&Word) -> Rational,
) -> Vec<CoefficientMismatch> {
    let mut out = Vec::new();
    let mut seen = 0;
    for w in words {
        let (e, a) = (expected(&w), p.coeff(&w));
        if !a.is_zero() {
            seen += 1;
        }
        if e != a {
            out.push(CoefficientMismatch {
                word: w.as_str().to_string(),
                expected: e.to_string(),
                actual: a.to_string(),
            });
        }
    }
    if seen != p.num_terms() {
        out.push(CoefficientMismatch {
            word: "<other degree>".into(),
            expected: "0".into(),
            actual: format!("{} stray terms", p.num_terms() - seen),
        });
    }
    out
}

fn big(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn c_pow(n: usize) -> NcPoly {
    NcPoly::word(Alphabet::Cd, "c").pow(n)
}

/// Compares `I(c^n)` with [`ladder_cd_coefficient`] on every cd-word of degree `n + 1`.
pub fn check_ladder(t: &mut Transforms, n: usize) -> Result<Vec<CoefficientMismatch>, TransformError> {
    let p = t.interval_cd(&c_pow(n))?;
    Ok(compare(&p, Word::cd_words_of_degree(n + 1), |w| {
        big(ladder_cd_coefficient(&KVector::from_word(w).expect("cd word"), n).expect("degree"))
    }))
}

/// The ab-level second-kind operator applied to `c^n`, rewritten in c and d.
pub(crate) fn second_kind_of_c_pow(t: &mut Transforms, n: usize) -> Result<NcPoly, TransformError> {
    let p = t.second_kind_ab(&expand(&c_pow(n), CdConvention::Psi))?;
    Ok(rewrite_ab_to_cd(&p, CdConvention::Psi)?)
}

/// Compares `II(c^n)` with [`ii_ladder_cd_coefficient`] on every cd-word of degree `n`.
pub fn check_ii_ladder(t: &mut Transforms, n: usize) -> Result<Vec<CoefficientMismatch>, TransformError> {
    let p = second_kind_of_c_pow(t, n)?;
    Ok(compare(&p, Word::cd_words_of_degree(n), |w| {
        big(ii_ladder_cd_coefficient(&KVector::from_word(w).expect("cd word"), n).expect("degree"))
    }))
}

/// Compares the ce-form of `II(c^n)` with [`uce_coefficient`]; words with an
/// odd run of `e` must be absent.
pub fn check_uce(t: &mut Transforms, n: usize) -> Result<Vec<CoefficientMismatch>, TransformError> {
    let p = cd_to_ce(&second_kind_of_c_pow(t, n)?)?;
    Ok(compare(&p, Word::all_of_length(Alphabet::Ce, n), |w| match e_square_count(w) {
        Some(r) => big(uce_coefficient(n, r).expect("2r <= n")),
        None => Rational::zero(),
    }))
}

/// Compares the ce-form of the Delannoy evaluation at `(i, j)` with [`mcce_coefficient`].
pub fn check_mcce(i: usize, j: usize) -> Result<Vec<CoefficientMismatch>, TransformError> {
    let p = cd_to_ce(&delannoy_m(i, j))?;
    Ok(compare(&p, Word::all_of_length(Alphabet::Ce, i + j + 1), |w| match e_square_count(w) {
        Some(r) => mcce_coefficient(i, j, r),
        None => Rational::zero(),
    }))
}
