use std::collections::BTreeMap;

use crate::ncpoly::{q, Alphabet, NcPoly};

/// Weight words of all Delannoy paths from `(-1, 0)` or `(0, -1)` to
/// `(i, j)`, with `c` for east and north steps and `x` for diagonal steps.
fn weight_words(i: usize, j: usize) -> BTreeMap<Vec<u8>, u64> {
    fn walk(x: i64, y: i64, tx: i64, ty: i64, word: &mut Vec<u8>, out: &mut BTreeMap<Vec<u8>, u64>) {
        if (x, y) == (tx, ty) {
            *out.entry(word.clone()).or_insert(0) += 1;
            return;
        }
        for (dx, dy, l) in [(1, 0, b'c'), (0, 1, b'c'), (1, 1, b'x')] {
            if x + dx <= tx && y + dy <= ty {
                word.push(l);
                walk(x + dx, y + dy, tx, ty, word, out);
                word.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    let (tx, ty) = (i as i64, j as i64);
    walk(-1, 0, tx, ty, &mut Vec::new(), &mut out);
    walk(0, -1, tx, ty, &mut Vec::new(), &mut out);
    out
}

/// Number of Delannoy paths from either start point to `(i, j)`.
pub fn delannoy_path_count(i: usize, j: usize) -> u64 {
    weight_words(i, j).values().sum()
}

/// Half the total weight of the Delannoy paths to `(i, j)`, with diagonal
/// steps weighing `2d - c^2`; weights multiply left to right along a path.
pub fn delannoy_m(i: usize, j: usize) -> NcPoly {
    let c = NcPoly::word(Alphabet::Cd, "c");
    let diag = NcPoly::parse(Alphabet::Cd, "2d-c^2").expect("static polynomial");
    let mut total = NcPoly::zero(Alphabet::Cd);
    for (word, count) in weight_words(i, j) {
        let mut p = NcPoly::one(Alphabet::Cd);
        for l in word {
            p = &p * if l == b'c' { &c } else { &diag };
        }
        total.add_scaled(&p, &q(count as i64, 1));
    }
    total.scale(&q(1, 2))
}
