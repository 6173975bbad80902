//! Finite simplicial complexes stored as explicit face sets.
//!
//! Faces are sorted label lists and always include the empty face. Every
//! constructor re-establishes downward closure, so a complex can be audited
//! face by face.

mod poly;
mod tcheb;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ncpoly::q;
use crate::poset::{GradedPoset, Poset};

pub use poly::{
    cheb_transform_t, cheb_transform_u, cheb_transform_u_shifted, chebyshev_t, chebyshev_u,
    UnivariatePoly,
};
pub use tcheb::{
    interval_edge_order, midpoint_label, order_complex_of_intervals_check, second_kind_links,
    stellar_subdivision, summed_f_polynomial, tchebyshev_triangulation, ComplexMultiset,
};

/// Maximum number of stored faces.
pub const FACE_CAP: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<String>),
    #[error("edge order is not a permutation of the edges: {0}")]
    NotAnEdgePermutation(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("complex exceeds {FACE_CAP} faces")]
    TooLarge,
    #[error("json: {0}")]
    Json(String),
}

pub type Face = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        SimplicialComplex {
            vertices: BTreeSet::new(),
            faces,
        }
    }

    /// Downward closure of the given faces; every listed vertex becomes a face.
    pub fn from_facets<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self, ComplexError> {
        let vertices: BTreeSet<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut gens: Vec<Face> = vertices.iter().map(|v| vec![v.clone()]).collect();
        for f in facets {
            let mut face: Face = f.iter().map(|v| v.as_ref().to_string()).collect();
            face.sort();
            face.dedup();
            if let Some(bad) = face.iter().find(|v| !vertices.contains(*v)) {
                return Err(ComplexError::UnknownVertex(bad.clone()));
            }
            gens.push(face);
        }
        Self::closure(vertices, gens)
    }

    /// Closes a family of sorted faces downward.
    pub(crate) fn closure(vertices: BTreeSet<String>, gens: Vec<Face>) -> Result<Self, ComplexError> {
        let mut faces: BTreeSet<Face> = BTreeSet::new();
        faces.insert(Vec::new());
        for g in gens {
            if faces.contains(&g) {
                continue;
            }
            if g.len() >= 17 {
                return Err(ComplexError::TooLarge);
            }
            for m in 1u32..(1 << g.len()) {
                let sub: Face = (0..g.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| g[i].clone())
                    .collect();
                faces.insert(sub);
            }
            if faces.len() > FACE_CAP {
                return Err(ComplexError::TooLarge);
            }
        }
        Ok(SimplicialComplex { vertices, faces })
    }

    /// Builds from a face set that is already downward closed.
    pub(crate) fn from_closed_faces(vertices: BTreeSet<String>, faces: BTreeSet<Face>) -> Result<Self, ComplexError> {
        if faces.len() > FACE_CAP {
            return Err(ComplexError::TooLarge);
        }
        let c = SimplicialComplex { vertices, faces };
        debug_assert!(c.is_downward_closed());
        Ok(c)
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn contains_face(&self, face: &[String]) -> bool {
        let mut f = face.to_vec();
        f.sort();
        self.faces.contains(&f)
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .faces
            .iter()
            .filter(|f| {
                !self.vertices.iter().any(|v| {
                    if f.contains(v) {
                        return false;
                    }
                    let mut g = (*f).clone();
                    g.push(v.clone());
                    g.sort();
                    self.faces.contains(&g)
                })
            })
            .cloned()
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Edges as sorted pairs.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f[0].clone(), f[1].clone()))
            .collect()
    }

    /// Checks downward closure and vertex consistency.
    pub fn is_downward_closed(&self) -> bool {
        if !self.faces.contains(&Vec::new()) {
            return false;
        }
        for v in &self.vertices {
            if !self.faces.contains(&vec![v.clone()]) {
                return false;
            }
        }
        self.faces.iter().all(|f| {
            f.iter().all(|v| self.vertices.contains(v))
                && (0..f.len()).all(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    self.faces.contains(&g)
                })
        })
    }

    /// Dimension: largest face size minus one (`-1` for the empty complex).
    pub fn dim(&self) -> isize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }

    /// `(f_{-1}, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; (self.dim() + 2) as usize];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }

    /// `Σ_j f_{j-1} ((x-1)/2)^j`.
    pub fn f_polynomial(&self) -> UnivariatePoly {
        f_polynomial_of(&self.f_vector())
    }

    /// `Σ_j f_{j-1} t^j (1-t)^{d-j}` with `d = dim + 1`.
    pub fn h_polynomial(&self) -> UnivariatePoly {
        let f = self.f_vector();
        let d = f.len() - 1;
        let t = UnivariatePoly::x();
        let one_minus_t = UnivariatePoly::from_ints(&[1, -1]);
        let mut h = UnivariatePoly::zero();
        for (j, &fj) in f.iter().enumerate() {
            let term = &t.pow(j) * &one_minus_t.pow(d - j);
            h = &h + &term.scale(&q(fj as i64, 1));
        }
        h
    }

    /// Faces `σ ∪ τ`; vertex labels are prefixed with `L:` and `R:` when
    /// the two vertex sets overlap.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        let clash = self.vertices.iter().any(|v| other.vertices.contains(v));
        let (a, b) = if clash {
            (self.prefixed("L:"), other.prefixed("R:"))
        } else {
            (self.clone(), other.clone())
        };
        if a.faces.len().saturating_mul(b.faces.len()) > FACE_CAP {
            return Err(ComplexError::TooLarge);
        }
        let mut faces = BTreeSet::new();
        for s in &a.faces {
            for t in &b.faces {
                let mut f = s.clone();
                f.extend(t.iter().cloned());
                f.sort();
                faces.insert(f);
            }
        }
        let vertices = a.vertices.union(&b.vertices).cloned().collect();
        Self::from_closed_faces(vertices, faces)
    }

    fn prefixed(&self, prefix: &str) -> SimplicialComplex {
        let rename = |v: &String| format!("{prefix}{v}");
        SimplicialComplex {
            vertices: self.vertices.iter().map(rename).collect(),
            faces: self
                .faces
                .iter()
                .map(|f| {
                    let mut g: Face = f.iter().map(rename).collect();
                    g.sort();
                    g
                })
                .collect(),
        }
    }

    /// Join with two isolated points `S+` and `S-`.
    pub fn suspension(&self) -> Result<SimplicialComplex, ComplexError> {
        let poles = SimplicialComplex::from_facets(&["S+", "S-"], &[])?;
        self.join(&poles)
    }

    /// `{σ - τ : τ ⊆ σ}`; the vertex set is that of the resulting faces.
    pub fn link(&self, face: &[String]) -> Result<SimplicialComplex, ComplexError> {
        let mut tau = face.to_vec();
        tau.sort();
        if !self.faces.contains(&tau) {
            return Err(ComplexError::FaceNotInComplex(tau));
        }
        let faces: BTreeSet<Face> = self
            .faces
            .iter()
            .filter(|s| tau.iter().all(|v| s.contains(v)))
            .map(|s| s.iter().filter(|v| !tau.contains(v)).cloned().collect())
            .collect();
        let vertices = faces.iter().flatten().cloned().collect();
        Self::from_closed_faces(vertices, faces)
    }

    /// Chains of `p`, optionally without its bottom and top.
    pub fn order_complex(p: &GradedPoset, strip_extremes: bool) -> Result<SimplicialComplex, ComplexError> {
        let keep: Vec<usize> = (0..p.len())
            .filter(|&i| !strip_extremes || (i != p.bottom() && i != p.top()))
            .collect();
        Self::order_complex_of(&p.poset().subposet(&keep))
    }

    /// Chains of an arbitrary poset.
    pub fn order_complex_of(p: &Poset) -> Result<SimplicialComplex, ComplexError> {
        let mut faces: BTreeSet<Face> = BTreeSet::new();
        faces.insert(Vec::new());
        let order = p.linear_extension();
        // extend chains upward in linear-extension order
        let mut stack: Vec<Vec<usize>> = order.iter().map(|&i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let mut f: Face = chain.iter().map(|&i| p.label(i).to_string()).collect();
            f.sort();
            faces.insert(f);
            if faces.len() > FACE_CAP {
                return Err(ComplexError::TooLarge);
            }
            let last = *chain.last().unwrap();
            for j in p.above(last) {
                let mut next = chain.clone();
                next.push(j);
                stack.push(next);
            }
        }
        let vertices = p.labels().iter().cloned().collect();
        Self::from_closed_faces(vertices, faces)
    }

    /// Renames vertices; the map must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> SimplicialComplex {
        let rename = |v: &String| map.get(v).cloned().unwrap_or_else(|| v.clone());
        SimplicialComplex {
            vertices: self.vertices.iter().map(rename).collect(),
            faces: self
                .faces
                .iter()
                .map(|f| {
                    let mut g: Face = f.iter().map(rename).collect();
                    g.sort();
                    g
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let j = ComplexJson {
            facets: self.facets(),
            vertices: self.vertices.iter().cloned().collect(),
        };
        serde_json::to_string(&j).expect("complex serializes")
    }

    pub fn from_json(s: &str) -> Result<SimplicialComplex, ComplexError> {
        let j: ComplexJson = serde_json::from_str(s).map_err(|e| ComplexError::Json(e.to_string()))?;
        SimplicialComplex::from_facets(&j.vertices, &j.facets)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    facets: Vec<Vec<String>>,
    vertices: Vec<String>,
}

/// `Σ_j f_{j-1} ((x-1)/2)^j` for an f-vector starting at `f_{-1}`.
pub fn f_polynomial_of(f: &[u64]) -> UnivariatePoly {
    let step = UnivariatePoly::new(vec![q(-1, 2), q(1, 2)]);
    let mut out = UnivariatePoly::zero();
    let mut power = UnivariatePoly::from_ints(&[1]);
    for &fj in f {
        out = &out + &power.scale(&q(fj as i64, 1));
        power = &power * &step;
    }
    out
}
