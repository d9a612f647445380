//! Exact polynomial and affine-expression arithmetic in one formal
//! variable `y`. Integer polynomials carry the weight-enumerator algebra;
//! rational coefficients appear in shadow intermediates and in the
//! affine expressions of parameterized enumerator families.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `y` with exact integer coefficients; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: usize, coeff: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = coeff.into();
        if !c.is_zero() {
            coeffs.insert(exponent, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn add_term(&mut self, exponent: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: usize) -> BigInt {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending exponents: `1 + 14y^4 + y^8`, with `-` binding to the
    /// following term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "y")?,
                (1, false) => write!(f, "{mag}y")?,
                (_, true) => write!(f, "y^{e}")?,
                (_, false) => write!(f, "{mag}y^{e}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `y` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: BTreeMap<usize, BigRational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: usize, coeff: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(exponent, coeff);
        out
    }

    pub fn add_term(&mut self, exponent: usize, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(exponent)
            .or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add_scaled(&mut self, other: &RatPolynomial, scale: &BigRational) {
        for (e, c) in &other.coeffs {
            self.add_term(*e, c * scale);
        }
    }

    pub fn coeff(&self, exponent: usize) -> BigRational {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, BigRational::from_integer(c.clone()));
        }
        out
    }

    /// Exact conversion; `None` if any coefficient has a denominator.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        let mut out = IntPolynomial::zero();
        for (e, c) in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*e, c.to_integer());
        }
        Some(out)
    }
}

/// An exact-rational expression `c_0 + Σ c_t·p_t` over named parameters;
/// the coefficient vector is aligned with the owning family's parameter
/// list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineExpr {
    pub constant: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl AffineExpr {
    pub fn constant(value: BigRational, arity: usize) -> Self {
        Self {
            constant: value,
            coeffs: vec![BigRational::zero(); arity],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        debug_assert_eq!(values.len(), self.coeffs.len());
        let mut out = self.constant.clone();
        for (c, v) in self.coeffs.iter().zip(values) {
            out += c * v;
        }
        out
    }

    /// Renders with the constant first and parameters in reverse
    /// declaration order: `355740 + 16b + 2a`, `-2600e + 276d + 22c + b`.
    pub fn render(&self, names: &[String]) -> String {
        debug_assert_eq!(names.len(), self.coeffs.len());
        let mut parts: Vec<(BigRational, Option<&str>)> = Vec::new();
        if !self.constant.is_zero() {
            parts.push((self.constant.clone(), None));
        }
        for t in (0..self.coeffs.len()).rev() {
            if !self.coeffs[t].is_zero() {
                parts.push((self.coeffs[t].clone(), Some(&names[t])));
            }
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, name)) in parts.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match name {
                None => out.push_str(&render_rational(&mag)),
                Some(n) if mag.is_one() => out.push_str(n),
                Some(n) => {
                    out.push_str(&render_rational(&mag));
                    out.push_str(n);
                }
            }
        }
        out
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_polynomial() {
        let p = IntPolynomial::from_terms([(0, 1), (4, 14), (8, 1)]);
        assert_eq!(p.to_string(), "1 + 14y^4 + y^8");
        let q = IntPolynomial::from_terms([(2, 1), (4, -2), (6, 1)]);
        assert_eq!(q.to_string(), "y^2 - 2y^4 + y^6");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn pow_expands_binomial() {
        let p = IntPolynomial::from_terms([(0, 1), (2, 1)]);
        let p4 = p.pow(4);
        assert_eq!(p4.coeff(0), BigInt::from(1));
        assert_eq!(p4.coeff(2), BigInt::from(4));
        assert_eq!(p4.coeff(4), BigInt::from(6));
        assert_eq!(p4.degree(), Some(8));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let mut p = IntPolynomial::monomial(3, 5);
        p.add_term(3, BigInt::from(-5));
        assert!(p.is_zero());
    }

    #[test]
    fn affine_render_matches_pinned_layout() {
        let names: Vec<String> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let expr = AffineExpr {
            constant: rat(355740),
            coeffs: vec![rat(2), rat(16), rat(0), rat(0), rat(0)],
        };
        assert_eq!(expr.render(&names), "355740 + 16b + 2a");

        let shadow16 = AffineExpr {
            constant: rat(0),
            coeffs: vec![rat(0), rat(1), rat(22), rat(276), rat(-2600)],
        };
        assert_eq!(shadow16.render(&names), "-2600e + 276d + 22c + b");

        let zero = AffineExpr::constant(rat(0), 5);
        assert_eq!(zero.render(&names), "0");
    }

    #[test]
    fn affine_eval() {
        let expr = AffineExpr {
            constant: rat(7),
            coeffs: vec![rat(-2), rat(3)],
        };
        assert_eq!(expr.eval(&[rat(1), rat(2)]), rat(11));
    }
}
