use super::{GradedPoset, Poset};
use crate::bits::BitSet;

/// The order dual: same labels, order reversed, ranks reflected.
pub fn dual(p: &GradedPoset) -> GradedPoset {
    let top = p.rank();
    let labels = p.labels().to_vec();
    let rank = p.ranks().iter().map(|r| top - r).collect();
    GradedPoset::from_ranked_order(labels, rank, |i, j| p.leq(j, i))
}

/// Componentwise product with labels `(p,q)`, enumerated `p`-major.
pub fn direct_product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    let m = q.len();
    let mut labels = Vec::with_capacity(p.len() * m);
    let mut rank = Vec::with_capacity(p.len() * m);
    for i in 0..p.len() {
        for j in 0..m {
            labels.push(format!("({},{})", p.label(i), q.label(j)));
            rank.push(p.rank_of(i) + q.rank_of(j));
        }
    }
    GradedPoset::from_ranked_order(labels, rank, |x, y| {
        p.leq(x / m, y / m) && q.leq(x % m, y % m)
    })
}

/// Label of the bottom adjoined by [`diamond_product`].
pub const DIAMOND_BOTTOM: &str = "⊥";

/// Removes both bottoms, multiplies, and adjoins a new bottom `⊥`.
pub fn diamond_product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    let ps: Vec<usize> = (0..p.len()).filter(|&i| i != p.bottom()).collect();
    let qs: Vec<usize> = (0..q.len()).filter(|&j| j != q.bottom()).collect();
    let mut labels = vec![DIAMOND_BOTTOM.to_string()];
    let mut rank = vec![0];
    let mut pairs = vec![(usize::MAX, usize::MAX)];
    for &i in &ps {
        for &j in &qs {
            labels.push(format!("({},{})", p.label(i), q.label(j)));
            rank.push(p.rank_of(i) + q.rank_of(j) - 1);
            pairs.push((i, j));
        }
    }
    GradedPoset::from_ranked_order(labels, rank, |x, y| {
        if x == 0 {
            return true;
        }
        if y == 0 {
            return false;
        }
        let ((a, b), (c, d)) = (pairs[x], pairs[y]);
        p.leq(a, c) && q.leq(b, d)
    })
}

/// Componentwise product of arbitrary posets, labels `(p,q)`.
pub fn product_poset(p: &Poset, q: &Poset) -> Poset {
    let m = q.len();
    let n = p.len() * m;
    let mut labels = Vec::with_capacity(n);
    for i in 0..p.len() {
        for j in 0..m {
            labels.push(format!("({},{})", p.label(i), q.label(j)));
        }
    }
    let mut above = vec![BitSet::new(n); n];
    for x in 0..n {
        for y in 0..n {
            if x != y && p.leq(x / m, y / m) && q.leq(x % m, y % m) {
                above[x].insert(y);
            }
        }
    }
    Poset::from_strict_order(labels, above)
}
