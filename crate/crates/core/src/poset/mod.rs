//! Finite posets and graded posets.
//!
//! A [`Poset`] stores its strict order as materialized reachability rows, so
//! order queries are constant time after construction. A [`GradedPoset`] adds
//! a rank function together with the unique bottom and top elements.
//!
//! Element labels are opaque strings. Derived constructions (products,
//! interval posets, duals) build new labels deterministically so that every
//! output is reproducible byte for byte.

mod construct;
mod generate;
mod intervals;
mod iso;
mod json;
mod support;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::bits::BitSet;

pub use construct::{diamond_product, direct_product, dual, product_poset, DIAMOND_BOTTOM};
pub use generate::{generate, PosetKind};
pub use intervals::{
    graded_interval_poset, interval_poset, second_kind_transform, second_kind_via_products,
    MultisetMember, PosetMultiset, EMPTY_INTERVAL,
};
pub use iso::{is_isomorphic, is_isomorphic_with_cap, DEFAULT_ISO_CAP};
pub use json::PosetJson;
pub use support::{count_chains_with_support, pell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("poset has no unique minimum and maximum")]
    NotBounded,
    #[error("cover ({0}, {1}) does not increase the rank by exactly one")]
    NotGraded(String, String),
    #[error("invalid size {0}: must be at least 1")]
    InvalidSize(usize),
    #[error("elements are not a strictly increasing chain")]
    NotAChain,
    #[error("chain must start at the bottom and end at the top")]
    EndpointsNotExtreme,
    #[error("poset has {0} elements, more than the isomorphism cap {1}")]
    TooLarge(usize, usize),
    #[error("serialized rank data does not match the cover relation: {0}")]
    RankMismatch(String),
    #[error("json: {0}")]
    Json(String),
}

/// A finite partially ordered set.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.above == other.above
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from labels and any generating relation; the order is
    /// its transitive closure and the stored covers its transitive reduction.
    pub fn new<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let index = index_labels(&labels)?;
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let mut succ = vec![Vec::new(); labels.len()];
        for (lo, hi) in relations {
            let (i, j) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            if i == j {
                return Err(PosetError::CycleDetected(labels[i].clone()));
            }
            succ[i].push(j);
        }
        let above = closure(&labels, &succ)?;
        Ok(Self::from_strict_order(labels, above))
    }

    /// `above[i]` must be the transitively closed strict up-set of `i`.
    pub(crate) fn from_strict_order(labels: Vec<String>, above: Vec<BitSet>) -> Self {
        let n = labels.len();
        let mut below = vec![BitSet::new(n); n];
        for (i, row) in above.iter().enumerate() {
            for j in row.iter() {
                below[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for (i, row) in above.iter().enumerate() {
            for j in row.iter() {
                if !row.intersects(&below[j]) {
                    covers.push((i, j));
                }
            }
        }
        Self::assemble(labels, above, below, covers)
    }

    /// Builds a poset from a strict order whose covers are already known.
    pub(crate) fn from_parts(
        labels: Vec<String>,
        above: Vec<BitSet>,
        covers: Vec<(usize, usize)>,
    ) -> Self {
        let n = labels.len();
        let mut below = vec![BitSet::new(n); n];
        for (i, row) in above.iter().enumerate() {
            for j in row.iter() {
                below[j].insert(i);
            }
        }
        Self::assemble(labels, above, below, covers)
    }

    fn assemble(
        labels: Vec<String>,
        above: Vec<BitSet>,
        below: Vec<BitSet>,
        mut covers: Vec<(usize, usize)>,
    ) -> Self {
        let n = labels.len();
        covers.sort_unstable();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(i, j) in &covers {
            upper[i].push(j);
            lower[j].push(i);
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Poset {
            labels,
            index,
            above,
            below,
            covers,
            upper,
            lower,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.above[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Cover pairs `(lower, upper)` in sorted index order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Elements strictly above `i`.
    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].iter()
    }

    /// Elements strictly below `i`.
    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[i].iter()
    }

    /// Number of elements strictly above / below `i`.
    pub fn up_degree(&self, i: usize) -> usize {
        self.above[i].count()
    }

    pub fn down_degree(&self, i: usize) -> usize {
        self.below[i].count()
    }

    /// Indices in a linear extension (every element after all elements below it).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.below[i].count(), i));
        order
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for i in self.linear_extension() {
            h[i] = self.lower[i].iter().map(|&j| h[j] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain starting at each element.
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0; self.len()];
        for i in self.linear_extension().into_iter().rev() {
            d[i] = self.upper[i].iter().map(|&j| d[j] + 1).max().unwrap_or(0);
        }
        d
    }

    /// Length of the longest chain from `u` to `v` (requires `u <= v`).
    pub fn longest_chain_between(&self, u: usize, v: usize) -> usize {
        let mut best = vec![None; self.len()];
        best[u] = Some(0usize);
        for i in self.linear_extension() {
            if i == u || !self.lt(u, i) || !self.leq(i, v) {
                continue;
            }
            best[i] = self.lower[i]
                .iter()
                .filter_map(|&j| best[j].map(|b| b + 1))
                .max();
        }
        best[v].unwrap_or(0)
    }

    /// The subposet induced on `keep` (in the given order).
    pub fn subposet(&self, keep: &[usize]) -> Poset {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let m = keep.len();
        let mut above = vec![BitSet::new(m); m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.lt(i, j) {
                    above[a].insert(b);
                }
            }
        }
        Poset::from_strict_order(labels, above)
    }

    /// The unique minimum element, if any.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.above[i].count() + 1 == self.len())
    }

    /// The unique maximum element, if any.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.below[i].count() + 1 == self.len())
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>, PosetError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// Transitive closure of a relation given by successor lists; errors on cycles.
fn closure(labels: &[String], succ: &[Vec<usize>]) -> Result<Vec<BitSet>, PosetError> {
    let n = labels.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &j in s {
            indeg[j] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(i) = queue.pop_front() {
        topo.push(i);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push_back(j);
            }
        }
    }
    if topo.len() < n {
        let culprit = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
        return Err(PosetError::CycleDetected(labels[culprit].clone()));
    }
    let mut above = vec![BitSet::new(n); n];
    for &i in topo.iter().rev() {
        let mut row = BitSet::new(n);
        for &j in &succ[i] {
            row.insert(j);
            row.union_with(&above[j]);
        }
        above[i] = row;
    }
    Ok(above)
}

/// A bounded poset with a rank function increasing by one along every cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoset {
    poset: Poset,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl GradedPoset {
    /// Validates and ranks a poset given by its elements and cover pairs.
    ///
    /// Every listed pair must be an actual cover that raises the rank by one;
    /// a listed pair implied by a longer path is reported as `NotGraded`.
    pub fn build<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let poset = Poset::new(elements, covers)?;
        let graded = Self::from_poset(poset)?;
        for (lo, hi) in covers {
            let i = graded.poset.index_of(lo.as_ref()).unwrap();
            let j = graded.poset.index_of(hi.as_ref()).unwrap();
            if graded.rank[j] != graded.rank[i] + 1 {
                return Err(PosetError::NotGraded(
                    lo.as_ref().to_string(),
                    hi.as_ref().to_string(),
                ));
            }
        }
        Ok(graded)
    }

    /// Ranks an arbitrary poset, failing unless it is bounded and graded.
    pub fn from_poset(poset: Poset) -> Result<Self, PosetError> {
        let bottom = poset.minimum().ok_or(PosetError::NotBounded)?;
        let top = poset.maximum().ok_or(PosetError::NotBounded)?;
        let mut rank = vec![usize::MAX; poset.len()];
        rank[bottom] = 0;
        for i in poset.linear_extension() {
            for &j in poset.lower_covers(i) {
                let r = rank[j] + 1;
                if rank[i] == usize::MAX {
                    rank[i] = r;
                } else if rank[i] != r {
                    return Err(PosetError::NotGraded(
                        poset.label(j).to_string(),
                        poset.label(i).to_string(),
                    ));
                }
            }
        }
        Ok(GradedPoset {
            poset,
            rank,
            bottom,
            top,
        })
    }

    /// Fast path for constructions that know their ranks: covers are exactly
    /// the comparable pairs whose ranks differ by one.
    pub(crate) fn from_ranked_order(
        labels: Vec<String>,
        rank: Vec<usize>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let n = labels.len();
        let mut above = vec![BitSet::new(n); n];
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && rank[i] < rank[j] && leq(i, j) {
                    above[i].insert(j);
                    if rank[j] == rank[i] + 1 {
                        covers.push((i, j));
                    }
                }
            }
        }
        let poset = Poset::from_parts(labels, above, covers);
        let bottom = (0..n).find(|&i| rank[i] == 0).expect("rank 0 element");
        let max_rank = rank.iter().copied().max().unwrap_or(0);
        let top = (0..n).find(|&i| rank[i] == max_rank).expect("top element");
        let graded = GradedPoset {
            poset,
            rank,
            bottom,
            top,
        };
        debug_assert!(graded.check_invariants().is_ok());
        graded
    }

    /// Re-derives boundedness and rank consistency from the stored order.
    pub fn check_invariants(&self) -> Result<(), PosetError> {
        let n = self.len();
        if self.poset.minimum() != Some(self.bottom) || self.poset.maximum() != Some(self.top) {
            return Err(PosetError::NotBounded);
        }
        if self.rank[self.bottom] != 0 {
            return Err(PosetError::RankMismatch("bottom has nonzero rank".into()));
        }
        for &(i, j) in self.poset.covers() {
            if self.rank[j] != self.rank[i] + 1 {
                return Err(PosetError::NotGraded(
                    self.label(i).to_string(),
                    self.label(j).to_string(),
                ));
            }
        }
        debug_assert_eq!(self.rank.len(), n);
        Ok(())
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Rank of the poset, i.e. the rank of its top element.
    pub fn rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.poset.lt(i, j)
    }

    /// Number of elements of each rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut prof = vec![0; self.rank() + 1];
        for &r in &self.rank {
            prof[r] += 1;
        }
        prof
    }

    /// The closed interval `[u, v]` as a graded poset of rank `rank(v) - rank(u)`.
    pub fn interval(&self, u: usize, v: usize) -> GradedPoset {
        assert!(self.leq(u, v), "interval endpoints must be comparable");
        let keep: Vec<usize> = (0..self.len())
            .filter(|&w| self.leq(u, w) && self.leq(w, v))
            .collect();
        let labels = keep.iter().map(|&i| self.label(i).to_string()).collect();
        let rank = keep.iter().map(|&i| self.rank[i] - self.rank[u]).collect();
        GradedPoset::from_ranked_order(labels, rank, |a, b| self.leq(keep[a], keep[b]))
    }

    /// Every nontrivial interval has as many elements of even rank as of odd
    /// rank. Checked by direct enumeration of all intervals.
    pub fn is_eulerian(&self) -> bool {
        let n = self.len();
        for u in 0..n {
            for v in self.poset.above(u) {
                let mut balance = 0i64;
                for w in 0..n {
                    if self.leq(u, w) && self.leq(w, v) {
                        balance += if self.rank[w] % 2 == 0 { 1 } else { -1 };
                    }
                }
                if balance != 0 {
                    return false;
                }
            }
        }
        true
    }
}
