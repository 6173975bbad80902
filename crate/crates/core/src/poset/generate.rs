use std::fmt;
use std::str::FromStr;

use super::{GradedPoset, PosetError};

/// Families of graded posets with a size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetKind {
    /// Subsets of `{1..n}` ordered by inclusion, rank `n`.
    Boolean,
    /// Rank `n + 1`, two elements on each intermediate rank, all adjacent
    /// ranks fully connected.
    Ladder,
    /// The chain `0 < 1 < ... < n`.
    Chain,
    /// Face lattice of the `n`-cube, rank `n + 1`.
    CubeLattice,
    /// Face lattice of the `n`-crosspolytope, rank `n + 1`.
    CrosspolytopeLattice,
}

impl PosetKind {
    pub const ALL: [PosetKind; 5] = [
        PosetKind::Boolean,
        PosetKind::Ladder,
        PosetKind::Chain,
        PosetKind::CubeLattice,
        PosetKind::CrosspolytopeLattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Boolean => "boolean",
            PosetKind::Ladder => "ladder",
            PosetKind::Chain => "chain",
            PosetKind::CubeLattice => "cube",
            PosetKind::CrosspolytopeLattice => "crosspolytope",
        }
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PosetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "boolean" | "b" => Ok(PosetKind::Boolean),
            "ladder" | "l" => Ok(PosetKind::Ladder),
            "chain" => Ok(PosetKind::Chain),
            "cube" | "cubelattice" | "cube-lattice" => Ok(PosetKind::CubeLattice),
            "crosspolytope" | "crosspolytopelattice" | "crosspolytope-lattice" => {
                Ok(PosetKind::CrosspolytopeLattice)
            }
            other => Err(format!("unknown poset kind `{other}`")),
        }
    }
}

/// Builds the member of `kind` with size parameter `n >= 1`.
pub fn generate(kind: PosetKind, n: usize) -> Result<GradedPoset, PosetError> {
    if n < 1 {
        return Err(PosetError::InvalidSize(n));
    }
    Ok(match kind {
        PosetKind::Boolean => boolean(n),
        PosetKind::Ladder => ladder(n),
        PosetKind::Chain => chain(n),
        PosetKind::CubeLattice => cube(n),
        PosetKind::CrosspolytopeLattice => crosspolytope(n),
    })
}

fn set_label(mask: u32, n: usize) -> String {
    let items: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

fn boolean(n: usize) -> GradedPoset {
    assert!(n < 20, "boolean algebra too large");
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let labels = masks.iter().map(|&m| set_label(m, n)).collect();
    let rank = masks.iter().map(|m| m.count_ones() as usize).collect();
    GradedPoset::from_ranked_order(labels, rank, |i, j| masks[i] & !masks[j] == 0)
}

fn chain(n: usize) -> GradedPoset {
    let labels = (0..=n).map(|i| i.to_string()).collect();
    let rank = (0..=n).collect();
    GradedPoset::from_ranked_order(labels, rank, |i, j| i <= j)
}

fn ladder(n: usize) -> GradedPoset {
    let mut labels = vec!["0".to_string()];
    let mut rank = vec![0];
    for i in 1..=n {
        labels.push(format!("-{i}"));
        labels.push(i.to_string());
        rank.extend([i, i]);
    }
    labels.push((n + 1).to_string());
    rank.push(n + 1);
    let r = rank.clone();
    GradedPoset::from_ranked_order(labels, rank, move |i, j| r[i] < r[j] || i == j)
}

/// Faces are words over `0`, `1`, `*`; the empty face is `∅`.
fn cube(n: usize) -> GradedPoset {
    let mut faces: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        faces = faces
            .into_iter()
            .flat_map(|f| {
                [b'0', b'1', b'*'].into_iter().map(move |c| {
                    let mut g = f.clone();
                    g.push(c);
                    g
                })
            })
            .collect();
    }
    let stars = |f: &[u8]| f.iter().filter(|&&c| c == b'*').count();
    faces.sort_by(|x, y| stars(x).cmp(&stars(y)).then_with(|| x.cmp(y)));
    let mut labels = vec![super::EMPTY_INTERVAL.to_string()];
    let mut rank = vec![0];
    for f in &faces {
        labels.push(String::from_utf8(f.clone()).unwrap());
        rank.push(stars(f) + 1);
    }
    GradedPoset::from_ranked_order(labels, rank, |i, j| {
        if i == 0 {
            return true;
        }
        if j == 0 {
            return false;
        }
        faces[i - 1]
            .iter()
            .zip(&faces[j - 1])
            .all(|(&a, &b)| b == b'*' || a == b)
    })
}

/// Proper faces are disjoint pairs `(K+, K-)` of subsets of `{1..n}`,
/// labelled like `({1},{3})`; the whole polytope is `top`.
fn crosspolytope(n: usize) -> GradedPoset {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for p in 0..1u32 << n {
        for m in 0..1u32 << n {
            if p & m == 0 {
                pairs.push((p, m));
            }
        }
    }
    pairs.sort_by_key(|&(p, m)| ((p | m).count_ones(), p, m));
    let mut labels: Vec<String> = pairs
        .iter()
        .map(|&(p, m)| format!("({},{})", set_label(p, n), set_label(m, n)))
        .collect();
    let mut rank: Vec<usize> = pairs
        .iter()
        .map(|&(p, m)| (p | m).count_ones() as usize)
        .collect();
    labels.push("top".to_string());
    rank.push(n + 1);
    let k = pairs.len();
    GradedPoset::from_ranked_order(labels, rank, |i, j| {
        if j == k {
            return true;
        }
        if i == k {
            return false;
        }
        let ((p1, m1), (p2, m2)) = (pairs[i], pairs[j]);
        p1 & !p2 == 0 && m1 & !m2 == 0
    })
}
