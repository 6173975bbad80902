use num_traits::One;

use super::{q, Alphabet, NcPoly, PolyError, Word};
use crate::Rational;

/// Splits a homogeneous degree-`n` polynomial as `sym + asym` with
/// `sym* = sym` and `asym* = -asym`.
pub fn sym_asym_split(p: &NcPoly, n: usize) -> Result<(NcPoly, NcPoly), PolyError> {
    match p.homogeneous_degree()? {
        Some(d) if d != n => return Err(PolyError::NotHomogeneous),
        _ => {}
    }
    let star = p.reverse_star();
    let half = q(1, 2);
    let sym = (p + &star).scale(&half);
    let asym = (p - &star).scale(&half);
    Ok((sym, asym))
}

/// `w - w*` for every ab-word `w` of length `n` preceding its reversal.
pub fn asym_basis(n: usize) -> Vec<NcPoly> {
    Word::all_of_length(Alphabet::Ab, n)
        .into_iter()
        .filter(|w| w.letters() < w.reversed().letters())
        .map(|w| {
            let mut p = NcPoly::monomial(Alphabet::Ab, w.reversed(), -Rational::one());
            p.add_term(w, Rational::one());
            p
        })
        .collect()
}

/// `w + w*` for every non-palindromic ab-word preceding its reversal,
/// and `w` itself for palindromes.
pub fn sym_basis(n: usize) -> Vec<NcPoly> {
    Word::all_of_length(Alphabet::Ab, n)
        .into_iter()
        .filter(|w| w.letters() <= w.reversed().letters())
        .map(|w| {
            let r = w.reversed();
            let mut p = NcPoly::monomial(Alphabet::Ab, w.clone(), Rational::one());
            if r != w {
                p.add_term(r, Rational::one());
            }
            p
        })
        .collect()
}

/// `2^{n-1} - 2^{floor((n-1)/2)}` for `n >= 1`, zero for `n = 0`.
pub fn asym_dimension(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (1 << (n - 1)) - (1 << ((n - 1) / 2))
    }
}

/// `2^{n-1} + 2^{floor((n-1)/2)}` for `n >= 1`, one for `n = 0`.
pub fn sym_dimension(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        (1 << (n - 1)) + (1 << ((n - 1) / 2))
    }
}
