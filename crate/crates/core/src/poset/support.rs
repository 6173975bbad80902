use super::{GradedPoset, PosetError};

/// Pell numbers with `pell(0) = 0`, `pell(1) = 1`, `pell(2) = 2`.
pub fn pell(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, 2 * b + a);
    }
    a
}

/// Counts chains `∅ < [u1,v1] < ... < [0̂,1̂]` of the graded interval poset
/// whose set of interval endpoints is exactly `support`.
pub fn count_chains_with_support<S: AsRef<str>>(
    p: &GradedPoset,
    support: &[S],
) -> Result<u64, PosetError> {
    let idx: Vec<usize> = support
        .iter()
        .map(|s| {
            p.index_of(s.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(s.as_ref().to_string()))
        })
        .collect::<Result<_, _>>()?;
    if idx.is_empty() || idx.windows(2).any(|w| !p.lt(w[0], w[1])) {
        return Err(PosetError::NotAChain);
    }
    if idx[0] != p.bottom() || idx[idx.len() - 1] != p.top() {
        return Err(PosetError::EndpointsNotExtreme);
    }
    let m = idx.len() - 1;
    if m == 0 {
        // a rank-0 poset: the only chain is the single interval [0̂,0̂]
        return Ok(1);
    }
    let full = (1u32 << (m + 1)) - 1;
    Ok(extend(0, m, 1 | 1 << m, full))
}

// Counts ways to continue a chain downward from the interval [i,j] of support
// positions, given the endpoint positions `seen` so far.
fn extend(i: usize, j: usize, seen: u32, full: u32) -> u64 {
    let mut total = u64::from(seen == full);
    for s in i..=j {
        for t in s..=j {
            if (s, t) != (i, j) {
                total += extend(s, t, seen | 1 << s | 1 << t, full);
            }
        }
    }
    total
}
