use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Alphabet, NcPoly, PolyError, Word};
use crate::Rational;

/// One term of the polynomial JSON format. Numerators and denominators are
/// arbitrary precision JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub den: serde_json::Number,
    pub num: serde_json::Number,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub alphabet: String,
    pub terms: Vec<TermJson>,
}

pub(crate) fn big_to_json(n: &BigInt) -> serde_json::Number {
    n.to_string().parse().expect("integer literal")
}

pub(crate) fn json_to_big(n: &serde_json::Number) -> Result<BigInt, String> {
    n.to_string()
        .parse()
        .map_err(|_| format!("`{n}` is not an integer"))
}

impl NcPoly {
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            alphabet: self.alphabet().name().to_string(),
            terms: self
                .terms()
                .map(|(w, c)| TermJson {
                    den: big_to_json(c.denom()),
                    num: big_to_json(c.numer()),
                    word: w.as_str().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json_value(j: &PolyJson) -> Result<NcPoly, PolyError> {
        let alphabet = Alphabet::from_name(&j.alphabet)
            .ok_or_else(|| PolyError::Parse(format!("unknown alphabet `{}`", j.alphabet)))?;
        let mut p = NcPoly::zero(alphabet);
        for t in &j.terms {
            if let Some(bad) = t.word.chars().find(|&ch| !ch.is_ascii() || !alphabet.contains(ch as u8)) {
                return Err(PolyError::BadLetter(bad, alphabet));
            }
            let num = json_to_big(&t.num).map_err(PolyError::Parse)?;
            let den = json_to_big(&t.den).map_err(PolyError::Parse)?;
            if den == BigInt::from(0) {
                return Err(PolyError::Parse("zero denominator".into()));
            }
            p.add_term(Word::from(t.word.as_str()), Rational::new(num, den));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<NcPoly, PolyError> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        NcPoly::from_json_value(&j)
    }
}
