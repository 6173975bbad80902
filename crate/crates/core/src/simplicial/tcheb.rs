use std::collections::{BTreeMap, BTreeSet};

use super::{f_polynomial_of, ComplexError, Face, SimplicialComplex, UnivariatePoly};
use crate::poset::{interval_poset, Poset};

/// Label of the vertex inserted on the edge `{u, v}`.
pub fn midpoint_label(u: &str, v: &str) -> String {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    format!("mid({a}|{b})")
}

/// Stellar subdivision of the edge `{u, v}` at a new vertex `w`: faces
/// containing the edge are replaced by `τ ∪ ρ ∪ {w}` with `τ` in the link
/// of the edge and `ρ` a proper subset of the edge.
pub fn stellar_subdivision(
    c: &SimplicialComplex,
    u: &str,
    v: &str,
    w: &str,
) -> Result<SimplicialComplex, ComplexError> {
    let edge: Face = {
        let mut e = vec![u.to_string(), v.to_string()];
        e.sort();
        e
    };
    if !c.faces().contains(&edge) {
        return Err(ComplexError::FaceNotInComplex(edge));
    }
    if c.vertices().contains(w) {
        return Err(ComplexError::NotAnEdgePermutation(format!("vertex `{w}` already exists")));
    }
    let contains_edge = |f: &Face| f.contains(&edge[0]) && f.contains(&edge[1]);
    let mut faces: BTreeSet<Face> = c.faces().iter().filter(|f| !contains_edge(f)).cloned().collect();
    let link: Vec<Face> = c
        .faces()
        .iter()
        .filter(|f| contains_edge(f))
        .map(|f| f.iter().filter(|x| !edge.contains(x)).cloned().collect())
        .collect();
    let rhos: [Vec<String>; 3] = [vec![], vec![edge[0].clone()], vec![edge[1].clone()]];
    for tau in &link {
        for rho in &rhos {
            let mut f = tau.clone();
            f.extend(rho.iter().cloned());
            f.push(w.to_string());
            f.sort();
            faces.insert(f);
        }
    }
    let mut vertices = c.vertices().clone();
    vertices.insert(w.to_string());
    SimplicialComplex::from_closed_faces(vertices, faces)
}

/// Subdivides every original edge once, in the given order, at midpoints
/// labelled by [`midpoint_label`].
pub fn tchebyshev_triangulation(
    c: &SimplicialComplex,
    edge_order: &[(String, String)],
) -> Result<SimplicialComplex, ComplexError> {
    let given: Vec<(String, String)> = edge_order
        .iter()
        .map(|(a, b)| if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) })
        .collect();
    let mut sorted = given.clone();
    sorted.sort();
    if sorted != c.edges() {
        return Err(ComplexError::NotAnEdgePermutation(format!(
            "expected the {} edges of the complex, got {} entries",
            c.edges().len(),
            given.len()
        )));
    }
    let mut cur = c.clone();
    for (a, b) in &given {
        cur = stellar_subdivision(&cur, a, b, &midpoint_label(a, b))?;
    }
    debug_assert!(cur.is_downward_closed());
    Ok(cur)
}

/// A multiset of complexes, each tagged with the vertex it came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexMultiset {
    pub members: Vec<(String, SimplicialComplex)>,
}

impl ComplexMultiset {
    /// Entrywise sum of member f-vectors.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for (_, c) in &self.members {
            let f = c.f_vector();
            if out.len() < f.len() {
                out.resize(f.len(), 0);
            }
            for (o, x) in out.iter_mut().zip(f) {
                *o += x;
            }
        }
        out
    }

    pub fn f_polynomial(&self) -> UnivariatePoly {
        summed_f_polynomial(self)
    }
}

/// Sum of the F-polynomials of the members.
pub fn summed_f_polynomial(m: &ComplexMultiset) -> UnivariatePoly {
    f_polynomial_of(&m.f_vector())
}

/// Links of the given original vertices inside a triangulation.
pub fn second_kind_links(
    t: &SimplicialComplex,
    original_vertices: &[String],
) -> Result<ComplexMultiset, ComplexError> {
    let mut members = Vec::with_capacity(original_vertices.len());
    for v in original_vertices {
        if !t.vertices().contains(v) {
            return Err(ComplexError::UnknownVertex(v.clone()));
        }
        members.push((v.clone(), t.link(std::slice::from_ref(v))?));
    }
    Ok(ComplexMultiset { members })
}

/// Edges `{u, v}` with `u < v`, longest intervals first: decreasing length
/// of the longest chain from `u` to `v`, ties by the labels of `(u, v)`.
/// An interval is always subdivided before any interval it contains.
pub fn interval_edge_order(p: &Poset) -> Vec<(String, String)> {
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    for u in 0..p.len() {
        for v in p.above(u) {
            pairs.push((p.longest_chain_between(u, v), p.label(u), p.label(v)));
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| (x.1, x.2).cmp(&(y.1, y.2))));
    pairs
        .into_iter()
        .map(|(_, a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Compares the order complex of the interval poset with the Tchebyshev
/// triangulation of the order complex of `p`, identifying `[u,u]` with `u`
/// and `[u,v]` with the midpoint of `{u, v}`.
pub fn order_complex_of_intervals_check(p: &Poset) -> Result<bool, ComplexError> {
    let ip = interval_poset(p);
    let direct = SimplicialComplex::order_complex_of(&ip)?;
    let mut rename = BTreeMap::new();
    for u in 0..p.len() {
        for v in 0..p.len() {
            if p.leq(u, v) {
                let target = if u == v {
                    p.label(u).to_string()
                } else {
                    midpoint_label(p.label(u), p.label(v))
                };
                rename.insert(format!("[{},{}]", p.label(u), p.label(v)), target);
            }
        }
    }
    let direct = direct.relabel(&rename);
    let base = SimplicialComplex::order_complex_of(p)?;
    let tri = tchebyshev_triangulation(&base, &interval_edge_order(p))?;
    Ok(direct == tri)
}
