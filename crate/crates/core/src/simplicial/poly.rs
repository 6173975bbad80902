use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ncpoly::json::{big_to_json, json_to_big};
use crate::Rational;

/// A univariate polynomial with exact rational coefficients, stored by
/// ascending degree with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Replaces each `x^n` by `basis(n)`.
    pub fn map_monomials(&self, mut basis: impl FnMut(usize) -> UnivariatePoly) -> Self {
        let mut out = Self::zero();
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &basis(n).scale(c);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let j = PolyCoeffsJson {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [big_to_json(c.numer()), big_to_json(c.denom())])
                .collect(),
        };
        serde_json::to_string(&j).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        let j: PolyCoeffsJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for [n, d] in &j.coeffs {
            let d = json_to_big(d)?;
            if d == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            coeffs.push(Rational::new(json_to_big(n)?, d));
        }
        Ok(Self::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyCoeffsJson {
    coeffs: Vec<[serde_json::Number; 2]>,
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else if a.is_integer() {
                write!(f, "{a}{mono}")?;
            } else {
                write!(f, "({a}){mono}")?;
            }
        }
        Ok(())
    }
}

/// Tchebyshev polynomials of the first kind `T_0..=T_n`.
pub fn chebyshev_t(n: usize) -> Vec<UnivariatePoly> {
    three_term(n, UnivariatePoly::from_ints(&[0, 1]))
}

/// Tchebyshev polynomials of the second kind `U_0..=U_n`.
pub fn chebyshev_u(n: usize) -> Vec<UnivariatePoly> {
    three_term(n, UnivariatePoly::from_ints(&[0, 2]))
}

fn three_term(n: usize, first: UnivariatePoly) -> Vec<UnivariatePoly> {
    let two_x = UnivariatePoly::from_ints(&[0, 2]);
    let mut out = vec![UnivariatePoly::from_ints(&[1]), first];
    while out.len() <= n {
        let k = out.len();
        let next = &(&two_x * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// The linear map `x^n -> T_n(x)`.
pub fn cheb_transform_t(p: &UnivariatePoly) -> UnivariatePoly {
    let t = chebyshev_t(p.degree().unwrap_or(0));
    p.map_monomials(|n| t[n].clone())
}

/// The linear map `x^n -> U_n(x)`.
pub fn cheb_transform_u(p: &UnivariatePoly) -> UnivariatePoly {
    let u = chebyshev_u(p.degree().unwrap_or(0));
    p.map_monomials(|n| u[n].clone())
}

/// The linear map `x^n -> U_{n-1}(x)`, with `x^0 -> 0`.
pub fn cheb_transform_u_shifted(p: &UnivariatePoly) -> UnivariatePoly {
    let u = chebyshev_u(p.degree().unwrap_or(0));
    p.map_monomials(|n| if n == 0 { UnivariatePoly::zero() } else { u[n - 1].clone() })
}
