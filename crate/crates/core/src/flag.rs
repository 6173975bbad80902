//! Flag f-vectors of graded posets and the ab-, cd- and ce-indices built from them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ncpoly::{
    cd_to_ce, rewrite_ab_to_cd, Alphabet, CdConvention, NcPoly, PolyError, Word,
};
use crate::poset::GradedPoset;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("poset of rank 0 has no flag f-vector")]
    RankZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Chain counts `f_S` for every set `S` of interior ranks `1..=n`, where the
/// poset has rank `n + 1`. Bit `i - 1` of the index encodes rank `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagFVector {
    n: usize,
    counts: Vec<u64>,
}

impl FlagFVector {
    /// Counts chains by their exact rank set, by dynamic programming over
    /// elements in rank order.
    pub fn of(p: &GradedPoset) -> Result<FlagFVector, IndexError> {
        if p.rank() == 0 {
            return Err(IndexError::RankZero);
        }
        let n = p.rank() - 1;
        let size = 1usize << n;
        let interior: Vec<usize> = {
            let mut v: Vec<usize> = (0..p.len())
                .filter(|&x| x != p.bottom() && x != p.top())
                .collect();
            v.sort_by_key(|&x| (p.rank_of(x), x));
            v
        };
        // ending[k][mask]: chains of interior elements ending at interior[k]
        let mut ending: Vec<Vec<u64>> = Vec::with_capacity(interior.len());
        let mut counts = vec![0u64; size];
        counts[0] = 1;
        for (k, &x) in interior.iter().enumerate() {
            let bit = 1usize << (p.rank_of(x) - 1);
            let mut row = vec![0u64; size];
            row[bit] = 1;
            for (j, &y) in interior[..k].iter().enumerate() {
                if p.lt(y, x) {
                    for (m, &c) in ending[j].iter().enumerate() {
                        if c != 0 {
                            row[m | bit] = row[m | bit].checked_add(c).expect("chain count overflow");
                        }
                    }
                }
            }
            for (m, &c) in row.iter().enumerate() {
                counts[m] += c;
            }
            ending.push(row);
        }
        Ok(FlagFVector { n, counts })
    }

    /// Number of interior ranks.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_S` for a rank set given as a bitmask.
    pub fn get_mask(&self, mask: usize) -> u64 {
        self.counts[mask]
    }

    /// `f_S` for a rank set given as a list of ranks.
    pub fn get(&self, ranks: &[usize]) -> u64 {
        self.counts[ranks.iter().map(|r| 1usize << (r - 1)).sum::<usize>()]
    }

    /// `(S, f_S)` pairs with `S` as sorted rank lists, in mask order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, u64)> + '_ {
        self.counts.iter().enumerate().map(|(m, &f)| {
            let s = (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect();
            (s, f)
        })
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ f_S u_S`, where `u_S` has `b` exactly at the positions in `S`.
    pub fn upsilon(&self) -> NcPoly {
        let mut p = NcPoly::zero(Alphabet::Ab);
        for (m, &f) in self.counts.iter().enumerate() {
            let w: Vec<u8> = (0..self.n)
                .map(|i| if m >> i & 1 == 1 { b'b' } else { b'a' })
                .collect();
            p.add_term(Word::new(w), Rational::from_integer(f.into()));
        }
        p
    }

    pub fn to_json_value(&self) -> FlagJson {
        FlagJson {
            counts: self.entries().map(|(s, f)| FlagEntry { s, f }).collect(),
            n: self.n,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("flag vector serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub f: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub counts: Vec<FlagEntry>,
    pub n: usize,
}

pub fn flag_f_vector(p: &GradedPoset) -> Result<FlagFVector, IndexError> {
    FlagFVector::of(p)
}

pub fn upsilon(p: &GradedPoset) -> Result<NcPoly, IndexError> {
    Ok(FlagFVector::of(p)?.upsilon())
}

/// The ab-index: the flag polynomial with `a` replaced by `a - b`.
pub fn ab_index(p: &GradedPoset) -> Result<NcPoly, IndexError> {
    Ok(upsilon_to_psi(&upsilon(p)?))
}

/// Substitutes `a -> a - b`.
pub fn upsilon_to_psi(u: &NcPoly) -> NcPoly {
    shift_a(u, -1)
}

/// Substitutes `a -> a + b`, the inverse of [`upsilon_to_psi`].
pub fn psi_to_upsilon(u: &NcPoly) -> NcPoly {
    shift_a(u, 1)
}

fn shift_a(u: &NcPoly, sign: i64) -> NcPoly {
    let mut img = std::collections::BTreeMap::new();
    let a = NcPoly::word(Alphabet::Ab, "a");
    let b = NcPoly::word(Alphabet::Ab, "b");
    img.insert('a', &a + &b.scale_int(sign));
    img.insert('b', b);
    u.substitute(&img).expect("ab images")
}

/// The cd-index, computed from the flag polynomial under the Upsilon
/// convention and from the ab-index under the Psi convention; the two
/// results are required to agree.
pub fn cd_index(p: &GradedPoset) -> Result<NcPoly, IndexError> {
    let ups = upsilon(p)?;
    let via_upsilon = rewrite_ab_to_cd(&ups, CdConvention::Upsilon)?;
    let via_psi = rewrite_ab_to_cd(&upsilon_to_psi(&ups), CdConvention::Psi)?;
    assert_eq!(via_upsilon, via_psi, "cd conventions disagree");
    Ok(via_upsilon)
}

/// The cd-index rewritten through `e = a - b`.
pub fn ce_index(p: &GradedPoset) -> Result<NcPoly, IndexError> {
    Ok(cd_to_ce(&cd_index(p)?)?)
}
