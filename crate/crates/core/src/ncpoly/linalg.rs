//! Exact row reduction over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{NcPoly, Word};
use crate::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = m.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// Coefficient vector of `p` against an ordered word basis.
pub fn coords(p: &NcPoly, basis: &[Word]) -> Vec<Rational> {
    basis.iter().map(|w| p.coeff(w)).collect()
}

/// Dimension of the span of a family of polynomials.
pub fn span_rank(polys: &[NcPoly]) -> usize {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for (w, _) in p.terms() {
            let k = index.len();
            index.entry(w.clone()).or_insert(k);
        }
    }
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut v = vec![Rational::zero(); index.len()];
            for (w, c) in p.terms() {
                v[index[w]] = c.clone();
            }
            v
        })
        .collect();
    rank(&rows)
}
