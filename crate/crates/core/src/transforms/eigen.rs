use serde::Serialize;

use super::{TransformError, Transforms};
use crate::ncpoly::linalg::{coords, rank, span_rank};
use crate::ncpoly::{asym_basis, asym_dimension, sym_basis, sym_dimension, Alphabet, NcPoly, Word};
use crate::Rational;

/// Kernel and span data for one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenDegreeReport {
    pub n: usize,
    pub kernel_dim: usize,
    pub asym_dim: usize,
    /// Every `w - w*` is annihilated.
    pub asym_in_kernel: bool,
    pub kernel_equals_asym: bool,
    pub sym_dim: usize,
    /// Rank of the span of all `n`-fold compositions of Pyr and lift applied to 1.
    pub composition_span: usize,
    pub compositions_span_sym: bool,
}

/// A composition of Pyr (`P`) and lift (`L`) applied to 1, read right to left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenWitness {
    pub word: String,
    pub degree: usize,
    pub eigenvalue: String,
    pub is_eigenvector: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenProduct {
    pub left: String,
    pub right: String,
    pub eigenvalue: String,
    pub is_eigenvector: bool,
}

/// Whether lift of a confirmed eigenvector is again an eigenvector with the
/// same eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftCheck {
    pub of: String,
    pub eigenvalue: String,
    pub preserved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub degrees: Vec<EigenDegreeReport>,
    pub witnesses: Vec<EigenWitness>,
    pub lifts: Vec<LiftCheck>,
    pub products: Vec<EigenProduct>,
}

impl EigenReport {
    /// Kernels contain Asym and every mixed product of confirmed
    /// eigenvectors is an eigenvector with the product eigenvalue.
    pub fn asserted_hold(&self) -> bool {
        self.degrees.iter().all(|d| d.asym_in_kernel) && self.products.iter().all(|p| p.is_eigenvector)
    }

    /// Lift checks that failed.
    pub fn lift_failures(&self) -> Vec<&LiftCheck> {
        self.lifts.iter().filter(|l| !l.preserved).collect()
    }
}

struct Witness {
    word: String,
    poly: NcPoly,
    eigenvalue: Rational,
}

fn is_eigen(t: &mut Transforms, p: &NcPoly, lambda: &Rational) -> Result<bool, TransformError> {
    Ok(t.second_kind_ab(p)? == p.scale(lambda))
}

/// Witness degrees beyond this are only used for spans, not mixed products.
const PRODUCT_DEGREE: usize = 2;

/// Evidence about the eigenstructure of II on degrees `1..=max_n`
/// (`max_n <= 7`). 1 has eigenvalue 2 and Pyr doubles eigenvalues; each
/// composition of Pyr and lift applied to 1 is tested against the
/// eigenvalue predicted if lift kept eigenvalues.
pub fn eigen_experiments(max_n: usize) -> Result<EigenReport, TransformError> {
    let max_n = max_n.min(7);
    let mut t = Transforms::new();
    let two = Rational::from_integer(2.into());
    let mut layer = vec![Witness {
        word: "1".into(),
        poly: NcPoly::one(Alphabet::Ab),
        eigenvalue: two.clone(),
    }];
    let mut witnesses = vec![EigenWitness {
        word: "1".into(),
        degree: 0,
        eigenvalue: two.to_string(),
        is_eigenvector: is_eigen(&mut t, &layer[0].poly, &two)?,
    }];
    let mut small: Vec<Witness> = vec![clone_w(&layer[0])];
    let mut degrees = Vec::new();
    for n in 1..=max_n {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for w in &layer {
            next.push(Witness {
                word: compose('P', &w.word),
                poly: t.pyr(&w.poly)?,
                eigenvalue: &w.eigenvalue * &two,
            });
            next.push(Witness {
                word: compose('L', &w.word),
                poly: t.lift(&w.poly)?,
                eigenvalue: w.eigenvalue.clone(),
            });
        }
        layer = next;
        for w in &layer {
            witnesses.push(EigenWitness {
                word: w.word.clone(),
                degree: n,
                eigenvalue: w.eigenvalue.to_string(),
                is_eigenvector: is_eigen(&mut t, &w.poly, &w.eigenvalue)?,
            });
            if n <= PRODUCT_DEGREE && witnesses.last().is_some_and(|x| x.is_eigenvector) {
                small.push(clone_w(w));
            }
        }
        degrees.push(degree_report(&mut t, n, &layer)?);
    }
    let mut lifts = Vec::new();
    for w in &witnesses {
        if !w.is_eigenvector || w.degree == max_n {
            continue;
        }
        let lifted = compose('L', &w.word);
        let l = witnesses.iter().find(|x| x.word == lifted).expect("lift is a composition");
        lifts.push(LiftCheck {
            of: w.word.clone(),
            eigenvalue: w.eigenvalue.clone(),
            preserved: l.is_eigenvector,
        });
    }
    let mut products = Vec::new();
    for x in &small {
        for y in &small {
            let lambda = &x.eigenvalue * &y.eigenvalue;
            let m = t.mixing_def(&x.poly, &y.poly)?;
            products.push(EigenProduct {
                left: x.word.clone(),
                right: y.word.clone(),
                eigenvalue: lambda.to_string(),
                is_eigenvector: is_eigen(&mut t, &m, &lambda)?,
            });
        }
    }
    Ok(EigenReport { degrees, witnesses, lifts, products })
}

fn compose(op: char, word: &str) -> String {
    if word == "1" {
        op.to_string()
    } else {
        format!("{op}{word}")
    }
}

fn clone_w(w: &Witness) -> Witness {
    Witness {
        word: w.word.clone(),
        poly: w.poly.clone(),
        eigenvalue: w.eigenvalue.clone(),
    }
}

fn degree_report(t: &mut Transforms, n: usize, layer: &[Witness]) -> Result<EigenDegreeReport, TransformError> {
    let basis = Word::all_of_length(Alphabet::Ab, n);
    let mut images = Vec::with_capacity(basis.len());
    for w in &basis {
        let img = t.second_kind_ab(&NcPoly::monomial(Alphabet::Ab, w.clone(), Rational::from_integer(1.into())))?;
        images.push(coords(&img, &basis));
    }
    let kernel_dim = basis.len() - rank(&images);
    let asym = asym_basis(n);
    let mut asym_in_kernel = true;
    for p in &asym {
        if !t.second_kind_ab(p)?.is_zero() {
            asym_in_kernel = false;
        }
    }
    let polys: Vec<NcPoly> = layer.iter().map(|w| w.poly.clone()).collect();
    let composition_span = span_rank(&polys);
    let mut with_sym = polys;
    with_sym.extend(sym_basis(n));
    let sym_dim = sym_dimension(n);
    Ok(EigenDegreeReport {
        n,
        kernel_dim,
        asym_dim: asym_dimension(n),
        asym_in_kernel,
        kernel_equals_asym: asym_in_kernel && kernel_dim == asym_dimension(n),
        sym_dim,
        composition_span,
        compositions_span_sym: composition_span == sym_dim && span_rank(&with_sym) == sym_dim,
    })
}
