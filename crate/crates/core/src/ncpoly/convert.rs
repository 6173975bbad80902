use std::collections::BTreeMap;

use super::{q, Alphabet, NcPoly, PolyError, Word};

/// How `c` and `d` expand into `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CdConvention {
    /// `c = a + b`, `d = ab + ba`: the ab-index convention.
    Psi,
    /// `c = a + 2b`, `d = ab + ba + 2b^2`: the flag f-vector convention.
    Upsilon,
}

fn images(alphabet: Alphabet, conv: CdConvention) -> BTreeMap<char, NcPoly> {
    let ab = |s: &str| NcPoly::parse(Alphabet::Ab, s).expect("static polynomial");
    let mut m = BTreeMap::new();
    match (alphabet, conv) {
        (Alphabet::Cd, CdConvention::Psi) => {
            m.insert('c', ab("a+b"));
            m.insert('d', ab("ab+ba"));
        }
        (Alphabet::Cd, CdConvention::Upsilon) => {
            m.insert('c', ab("a+2b"));
            m.insert('d', ab("ab+ba+2b^2"));
        }
        (Alphabet::Ce, CdConvention::Psi) => {
            m.insert('c', ab("a+b"));
            m.insert('e', ab("a-b"));
        }
        (Alphabet::Ce, CdConvention::Upsilon) => {
            m.insert('c', ab("a+2b"));
            m.insert('e', ab("a"));
        }
        (Alphabet::Ab, _) => {
            m.insert('a', ab("a"));
            m.insert('b', ab("b"));
        }
    }
    m
}

/// Expands a cd- or ce-polynomial into the ab alphabet. Under the Upsilon
/// convention `e` becomes `a`, the image of `a - b` after `a -> a + b`.
pub fn expand(p: &NcPoly, conv: CdConvention) -> NcPoly {
    p.substitute(&images(p.alphabet(), conv))
        .expect("every letter has an image")
}

/// Expansion of the cd-word whose ab-expansion has the smallest word
/// `lead`, or the offending prefix if `lead` is not such a word.
fn decode_lead(lead: &Word) -> Result<Word, PolyError> {
    let l = lead.letters();
    let mut out = Vec::new();
    let mut i = 0;
    while i < l.len() {
        match (l[i], l.get(i + 1)) {
            (b'a', Some(b'b')) => {
                out.push(b'd');
                i += 2;
            }
            (b'a', _) => {
                out.push(b'c');
                i += 1;
            }
            _ => return Err(PolyError::NotExpressible(lead.as_str().to_string())),
        }
    }
    Ok(Word::new(out))
}

/// The unique cd-polynomial expanding to `p` under the convention.
///
/// Under either convention the lexicographically least ab-word in the
/// expansion of a cd-word (`a` for `c`, `ab` for `d`) has coefficient 1 and
/// determines the cd-word, so the system is triangular and is solved by
/// repeatedly cancelling the least remaining ab-word.
pub fn rewrite_ab_to_cd(p: &NcPoly, conv: CdConvention) -> Result<NcPoly, PolyError> {
    if p.alphabet() != Alphabet::Ab {
        return Err(PolyError::UnsupportedAlphabet(p.alphabet()));
    }
    p.homogeneous_degree()?;
    let mut rest = p.clone();
    let mut out = NcPoly::zero(Alphabet::Cd);
    let mut cache: BTreeMap<Word, NcPoly> = BTreeMap::new();
    loop {
        let Some((lead, coeff)) = rest.terms().next().map(|(w, c)| (w.clone(), c.clone())) else {
            break;
        };
        let w = decode_lead(&lead)?;
        let img = cache
            .entry(w.clone())
            .or_insert_with(|| expand(&NcPoly::monomial(Alphabet::Cd, w.clone(), q(1, 1)), conv));
        rest.add_scaled(img, &-coeff.clone());
        out.add_term(w, coeff);
    }
    Ok(out)
}

/// Rewrites `d` as `(c^2 - e^2)/2`.
pub fn cd_to_ce(p: &NcPoly) -> Result<NcPoly, PolyError> {
    if p.alphabet() != Alphabet::Cd {
        return Err(PolyError::UnsupportedAlphabet(p.alphabet()));
    }
    let mut m = BTreeMap::new();
    m.insert('c', NcPoly::word(Alphabet::Ce, "c"));
    m.insert('d', NcPoly::parse(Alphabet::Ce, "1/2 c^2 - 1/2 e^2").unwrap());
    p.substitute(&m)
}

/// Rewrites each maximal run `e^{2m}` as `(c^2 - 2d)^m`.
pub fn ce_to_cd(p: &NcPoly) -> Result<NcPoly, PolyError> {
    if p.alphabet() != Alphabet::Ce {
        return Err(PolyError::UnsupportedAlphabet(p.alphabet()));
    }
    let e2 = NcPoly::parse(Alphabet::Cd, "c^2 - 2d").unwrap();
    let c = NcPoly::word(Alphabet::Cd, "c");
    let mut out = NcPoly::zero(Alphabet::Cd);
    for (w, coeff) in p.terms() {
        let l = w.letters();
        let mut acc = NcPoly::one(Alphabet::Cd);
        let mut i = 0;
        while i < l.len() {
            if l[i] == b'c' {
                acc = &acc * &c;
                i += 1;
                continue;
            }
            let mut j = i;
            while j < l.len() && l[j] == b'e' {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                return Err(PolyError::OddEPower(w.as_str().to_string()));
            }
            acc = &acc * &e2.pow((j - i) / 2);
            i = j;
        }
        out.add_scaled(&acc, coeff);
    }
    Ok(out)
}

/// Number of `e^2` factors in a ce-word whose e-runs all have even length.
pub fn e_square_count(w: &Word) -> Option<usize> {
    let l = w.letters();
    let mut count = 0;
    let mut i = 0;
    while i < l.len() {
        if l[i] != b'e' {
            i += 1;
            continue;
        }
        let mut j = i;
        while j < l.len() && l[j] == b'e' {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            return None;
        }
        count += (j - i) / 2;
        i = j;
    }
    Some(count)
}
