use std::fmt;

use num_traits::{One, Signed};

use super::{Alphabet, NcPoly, PolyError, Word};
use crate::Rational;

/// Grammar: terms separated by `+` or `-`; a term is an optional rational
/// coefficient (optionally parenthesized or followed by `*`) and a word
/// whose letters may carry `^k` exponents. `1` alone is the empty word.
pub(super) fn parse(alphabet: Alphabet, text: &str) -> Result<NcPoly, PolyError> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = NcPoly::zero(alphabet);
    if s.is_empty() || s == ['0'] {
        return Ok(out);
    }
    let mut i = 0;
    let mut first = true;
    while i < s.len() {
        let mut sign = Rational::one();
        if s[i] == '+' || s[i] == '-' {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !first {
            return Err(PolyError::Parse(format!("expected + or - at {i}")));
        }
        first = false;
        let (coeff, had_coeff) = parse_coeff(&s, &mut i)?;
        let mut letters = Vec::new();
        while i < s.len() && s[i] != '+' && s[i] != '-' {
            let ch = s[i];
            if ch == '*' || ch == '·' {
                i += 1;
                continue;
            }
            if !ch.is_ascii_lowercase() {
                return Err(PolyError::Parse(format!("unexpected `{ch}`")));
            }
            let l = ch as u8;
            if !alphabet.contains(l) {
                return Err(PolyError::BadLetter(ch, alphabet));
            }
            i += 1;
            let mut k = 1;
            if i < s.len() && s[i] == '^' {
                i += 1;
                k = parse_uint(&s, &mut i)?;
            }
            letters.extend(std::iter::repeat_n(l, k));
        }
        if letters.is_empty() && !had_coeff {
            return Err(PolyError::Parse("empty term".into()));
        }
        out.add_term(Word::new(letters), sign * coeff);
    }
    Ok(out)
}

fn parse_uint(s: &[char], i: &mut usize) -> Result<usize, PolyError> {
    let start = *i;
    while *i < s.len() && s[*i].is_ascii_digit() {
        *i += 1;
    }
    if start == *i {
        return Err(PolyError::Parse(format!("expected digits at {start}")));
    }
    s[start..*i]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|e| PolyError::Parse(format!("{e}")))
}

fn parse_coeff(s: &[char], i: &mut usize) -> Result<(Rational, bool), PolyError> {
    let paren = *i < s.len() && s[*i] == '(';
    if paren {
        *i += 1;
    }
    if *i >= s.len() || !s[*i].is_ascii_digit() {
        if paren {
            return Err(PolyError::Parse("expected coefficient after `(`".into()));
        }
        return Ok((Rational::one(), false));
    }
    let start = *i;
    while *i < s.len() && (s[*i].is_ascii_digit() || s[*i] == '/') {
        *i += 1;
    }
    let text: String = s[start..*i].iter().collect();
    let r: Rational = text
        .parse()
        .map_err(|_| PolyError::Parse(format!("bad coefficient `{text}`")))?;
    if paren {
        if *i >= s.len() || s[*i] != ')' {
            return Err(PolyError::Parse("missing `)`".into()));
        }
        *i += 1;
    }
    Ok((r, true))
}

/// Writes a word with runs compressed, e.g. `ab^2a`; the empty word is `1`.
pub(crate) fn format_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let l = w.letters();
    let mut i = 0;
    while i < l.len() {
        let mut j = i;
        while j < l.len() && l[j] == l[i] {
            j += 1;
        }
        out.push(l[i] as char);
        if j - i > 1 {
            out.push('^');
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

pub(super) fn write_poly(f: &mut fmt::Formatter<'_>, p: &NcPoly) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (k, (w, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let a = c.abs();
        if w.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            f.write_str(&format_word(w))?;
        } else if a.is_integer() {
            write!(f, "{a}{}", format_word(w))?;
        } else {
            write!(f, "({a}){}", format_word(w))?;
        }
    }
    Ok(())
}
