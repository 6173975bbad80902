//! Operators on ab- and cd-polynomials that track poset constructions:
//! the interval transforms, the mixing operator of a direct product, the
//! pyramid and lift operators, and closed forms for ladder posets.
//!
//! Recursive operators memoize on word keys inside a [`Transforms`] value,
//! which is owned by one caller at a time (`&mut self`). The free functions
//! build a fresh cache per call.

mod closed;
mod delannoy;
mod eigen;
mod engine;

use thiserror::Error;

use crate::ncpoly::{NcPoly, PolyError};

pub use closed::{
    check_ii_ladder, check_ladder, check_mcce, check_uce, gamma, gamma_closed_form,
    ii_ladder_cd_coefficient, ladder_cd_coefficient, mcce_coefficient, uce_coefficient,
    CoefficientMismatch, KVector,
};
pub use delannoy::{delannoy_m, delannoy_path_count};
pub use eigen::{eigen_experiments, EigenDegreeReport, EigenProduct, EigenReport, EigenWitness, LiftCheck};
pub use engine::Transforms;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("composition has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// ι on an ab-polynomial (flag polynomial of `P` to that of its graded interval poset).
pub fn iota(p: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().iota(p)
}

/// I on an ab-polynomial (ab-index of `P` to that of its graded interval poset).
pub fn interval_ab(p: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().interval_ab(p)
}

/// I on a cd-polynomial.
pub fn interval_cd(p: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().interval_cd(p)
}

/// II on an ab-polynomial (total ab-index of the second-kind transform).
pub fn second_kind_ab(p: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().second_kind_ab(p)
}

/// II on a cd-polynomial.
pub fn second_kind_cd(p: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().second_kind_cd(p)
}

/// The mixing operator on ab-polynomials from its defining recursion.
pub fn mixing_def(u: &NcPoly, v: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().mixing_def(u, v)
}

/// The mixing operator on cd-polynomials from the c/d recursions.
pub fn mixing_cd(u: &NcPoly, v: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().mixing_cd(u, v)
}

/// `M(1, u)` in the alphabet of `u`.
pub fn pyr(u: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().pyr(u)
}

/// `(a-b)u + u(a-b)` on ab-polynomials.
pub fn lift(u: &NcPoly) -> Result<NcPoly, TransformError> {
    Transforms::new().lift(u)
}
