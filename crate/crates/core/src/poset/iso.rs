use std::collections::HashMap;

use super::{Poset, PosetError};

/// Default element cap for [`is_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 64;

/// Order isomorphism test with the default size cap.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Result<bool, PosetError> {
    is_isomorphic_with_cap(p, q, DEFAULT_ISO_CAP)
}

/// Order isomorphism test by colour refinement followed by backtracking.
///
/// Colours start from heights, depths, up/down degrees and cover degrees and
/// are refined by the colour multisets of upper and lower covers, computed
/// jointly for both posets so colour ids are comparable.
pub fn is_isomorphic_with_cap(p: &Poset, q: &Poset, cap: usize) -> Result<bool, PosetError> {
    for x in [p, q] {
        if x.len() > cap {
            return Err(PosetError::TooLarge(x.len(), cap));
        }
    }
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return Ok(false);
    }
    let (cp, cq) = refine(p, q);
    let mut hp = cp.clone();
    let mut hq = cq.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return Ok(false);
    }
    // Assign in a linear extension of p, rarest colours first among ties.
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in &cp {
        *freq.entry(c).or_default() += 1;
    }
    let mut order = p.linear_extension();
    order.sort_by_key(|&i| (p.down_degree(i), freq[&cp[i]], i));
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    Ok(search(p, q, &cp, &cq, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &Poset,
    q: &Poset,
    cp: &[usize],
    cq: &[usize],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..q.len() {
        if used[y] || cq[y] != cp[x] {
            continue;
        }
        let consistent = order[..k].iter().all(|&a| {
            let b = map[a];
            p.leq(a, x) == q.leq(b, y) && p.leq(x, a) == q.leq(y, b)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if search(p, q, cp, cq, order, k + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

fn refine(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
    let initial = |x: &Poset| -> Vec<Vec<usize>> {
        let h = x.heights();
        let d = x.depths();
        (0..x.len())
            .map(|i| {
                vec![
                    h[i],
                    d[i],
                    x.down_degree(i),
                    x.up_degree(i),
                    x.lower_covers(i).len(),
                    x.upper_covers(i).len(),
                ]
            })
            .collect()
    };
    let (mut cp, mut cq) = relabel(initial(p), initial(q));
    let mut classes = distinct(&cp, &cq);
    loop {
        let step = |x: &Poset, c: &[usize]| -> Vec<Vec<usize>> {
            (0..x.len())
                .map(|i| {
                    let mut up: Vec<usize> = x.upper_covers(i).iter().map(|&j| c[j]).collect();
                    let mut down: Vec<usize> = x.lower_covers(i).iter().map(|&j| c[j]).collect();
                    up.sort_unstable();
                    down.sort_unstable();
                    let mut sig = vec![c[i], usize::MAX];
                    sig.extend(up);
                    sig.push(usize::MAX);
                    sig.extend(down);
                    sig
                })
                .collect()
        };
        let (np, nq) = relabel(step(p, &cp), step(q, &cq));
        let n = distinct(&np, &nq);
        cp = np;
        cq = nq;
        if n == classes {
            return (cp, cq);
        }
        classes = n;
    }
}

fn relabel(a: Vec<Vec<usize>>, b: Vec<Vec<usize>>) -> (Vec<usize>, Vec<usize>) {
    let mut keys: Vec<&Vec<usize>> = a.iter().chain(b.iter()).collect();
    keys.sort();
    keys.dedup();
    let ids: HashMap<&Vec<usize>, usize> = keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    (
        a.iter().map(|s| ids[s]).collect(),
        b.iter().map(|s| ids[s]).collect(),
    )
}

fn distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
