use super::{direct_product, dual, GradedPoset, Poset};
use crate::bits::BitSet;

/// Label of the empty interval adjoined as the bottom of the graded interval poset.
pub const EMPTY_INTERVAL: &str = "∅";

pub(crate) fn interval_label(p: &Poset, u: usize, v: usize) -> String {
    format!("[{},{}]", p.label(u), p.label(v))
}

fn interval_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..p.len() {
        for v in 0..p.len() {
            if p.leq(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// All nonempty intervals `[u,v]` ordered by inclusion.
pub fn interval_poset(p: &Poset) -> Poset {
    let pairs = interval_pairs(p);
    let n = pairs.len();
    let labels = pairs.iter().map(|&(u, v)| interval_label(p, u, v)).collect();
    let mut above = vec![BitSet::new(n); n];
    for (x, &(u, v)) in pairs.iter().enumerate() {
        for (y, &(s, t)) in pairs.iter().enumerate() {
            if x != y && p.leq(s, u) && p.leq(v, t) {
                above[x].insert(y);
            }
        }
    }
    Poset::from_strict_order(labels, above)
}

/// Intervals of a graded poset with the empty interval `∅` as new bottom;
/// `[u,v]` has rank `rank(v) - rank(u) + 1`.
pub fn graded_interval_poset(p: &GradedPoset) -> GradedPoset {
    let pairs = interval_pairs(p.poset());
    let mut labels = vec![EMPTY_INTERVAL.to_string()];
    let mut rank = vec![0];
    for &(u, v) in &pairs {
        labels.push(interval_label(p.poset(), u, v));
        rank.push(p.rank_of(v) - p.rank_of(u) + 1);
    }
    GradedPoset::from_ranked_order(labels, rank, |x, y| {
        if x == 0 {
            return true;
        }
        if y == 0 {
            return false;
        }
        let ((u, v), (s, t)) = (pairs[x - 1], pairs[y - 1]);
        p.leq(s, u) && p.leq(v, t)
    })
}

/// One poset of a [`PosetMultiset`] together with the element that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetMember {
    pub generator: String,
    pub poset: GradedPoset,
}

/// A list of graded posets; repetition allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetMultiset {
    pub members: Vec<MultisetMember>,
}

impl PosetMultiset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultisetMember> {
        self.members.iter()
    }

    /// Pairwise direct products of members, generators joined as `(x,y)`.
    pub fn product(&self, other: &PosetMultiset) -> PosetMultiset {
        let mut members = Vec::with_capacity(self.len() * other.len());
        for a in &self.members {
            for b in &other.members {
                members.push(MultisetMember {
                    generator: format!("({},{})", a.generator, b.generator),
                    poset: direct_product(&a.poset, &b.poset),
                });
            }
        }
        PosetMultiset { members }
    }
}

/// For each `x`, the upper interval `[[x,x],[0̂,1̂]]` of the interval poset:
/// all `[y,z]` with `y <= x <= z`, ranked by `rank(z) - rank(y)`.
pub fn second_kind_transform(p: &GradedPoset) -> PosetMultiset {
    let members = (0..p.len())
        .map(|x| {
            let pairs: Vec<(usize, usize)> = (0..p.len())
                .filter(|&y| p.leq(y, x))
                .flat_map(|y| {
                    (0..p.len())
                        .filter(move |&z| p.leq(x, z))
                        .map(move |z| (y, z))
                })
                .collect();
            let labels = pairs
                .iter()
                .map(|&(y, z)| interval_label(p.poset(), y, z))
                .collect();
            let rank = pairs
                .iter()
                .map(|&(y, z)| p.rank_of(z) - p.rank_of(y))
                .collect();
            let poset = GradedPoset::from_ranked_order(labels, rank, |i, j| {
                let ((u, v), (s, t)) = (pairs[i], pairs[j]);
                p.leq(s, u) && p.leq(v, t)
            });
            MultisetMember {
                generator: p.label(x).to_string(),
                poset,
            }
        })
        .collect();
    PosetMultiset { members }
}

/// The same multiset built as `dual([0̂,x]) × [x,1̂]` for each `x`.
pub fn second_kind_via_products(p: &GradedPoset) -> PosetMultiset {
    let members = (0..p.len())
        .map(|x| MultisetMember {
            generator: p.label(x).to_string(),
            poset: direct_product(&dual(&p.interval(p.bottom(), x)), &p.interval(x, p.top())),
        })
        .collect();
    PosetMultiset { members }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{generate, is_isomorphic, PosetKind};

    #[test]
    fn chain_interval_poset_has_eleven_elements() {
        let c3 = generate(PosetKind::Chain, 3).unwrap();
        let ip = graded_interval_poset(&c3);
        assert_eq!(ip.len(), 11);
        assert_eq!(ip.rank(), 4);
        assert_eq!(ip.label(ip.bottom()), EMPTY_INTERVAL);
        assert_eq!(ip.label(ip.top()), "[0,3]");
    }

    #[test]
    fn antichain_intervals() {
        let a = Poset::new(&["x", "y", "z"], &[]).unwrap();
        let ip = interval_poset(&a);
        assert_eq!(ip.len(), 3);
        assert!(ip.covers().is_empty());
    }

    #[test]
    fn second_kind_of_boolean_square() {
        let b2 = generate(PosetKind::Boolean, 2).unwrap();
        let direct = second_kind_transform(&b2);
        let via = second_kind_via_products(&b2);
        assert_eq!(direct.len(), 4);
        for (a, b) in direct.iter().zip(via.iter()) {
            assert_eq!(a.generator, b.generator);
            assert!(is_isomorphic(a.poset.poset(), b2.poset()).unwrap());
            assert!(is_isomorphic(a.poset.poset(), b.poset.poset()).unwrap());
        }
    }

    #[test]
    fn second_kind_of_short_chain() {
        let c1 = generate(PosetKind::Chain, 1).unwrap();
        let ms = second_kind_transform(&c1);
        assert_eq!(ms.len(), 2);
        for m in ms.iter() {
            assert_eq!(m.poset.len(), 2);
            assert_eq!(m.poset.rank(), 1);
        }
    }
}
