//! Univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{int, serialize_rational, ExactScalar};

/// Dense polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is non-zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<ExactScalar>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a + b·x`.
    pub fn linear(a: ExactScalar, b: ExactScalar) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coefficients(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> ExactScalar {
        self.coeffs.get(d).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at zero (`None` for the zero polynomial).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs.iter().rev().fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &ExactPolynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ExactPolynomial) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![ExactScalar::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &ExactScalar::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", serialize_rational(&mag))?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Quotient of two polynomials, kept unreduced. Used to take limits at zero.
#[derive(Clone, Debug)]
pub(crate) struct RationalFunction {
    pub num: ExactPolynomial,
    pub den: ExactPolynomial,
}

/// Outcome of evaluating a rational function at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LimitAtZero {
    Finite(ExactScalar),
    Pole,
}

impl RationalFunction {
    pub fn constant(c: ExactScalar) -> Self {
        RationalFunction { num: ExactPolynomial::constant(c), den: ExactPolynomial::one() }
    }

    pub fn from_poly(p: ExactPolynomial) -> Self {
        RationalFunction { num: p, den: ExactPolynomial::one() }
    }

    /// Panics if `den` is the zero polynomial.
    pub fn quotient(num: ExactPolynomial, den: ExactPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }.strip()
    }

    fn strip(mut self) -> Self {
        // common powers of the variable cancel
        let (Some(a), Some(b)) = (self.num.valuation(), self.den.valuation()) else {
            return self;
        };
        let c = a.min(b);
        if c > 0 {
            self.num = ExactPolynomial::new(self.num.coeffs[c..].to_vec());
            self.den = ExactPolynomial::new(self.den.coeffs[c..].to_vec());
        }
        self
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction { num: &self.num + &rhs.num, den: self.den.clone() }.strip();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction { num, den: &self.den * &rhs.den }.strip()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.strip()
    }

    pub fn limit_at_zero(&self) -> LimitAtZero {
        let Some(b) = self.den.valuation() else {
            return LimitAtZero::Pole;
        };
        match self.num.valuation() {
            None => LimitAtZero::Finite(ExactScalar::zero()),
            Some(a) if a > b => LimitAtZero::Finite(ExactScalar::zero()),
            Some(a) if a == b => LimitAtZero::Finite(self.num.coeff(a) / self.den.coeff(b)),
            Some(_) => LimitAtZero::Pole,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = ExactPolynomial> {
        prop::collection::vec(-6i64..6, 0..6).prop_map(|c| ExactPolynomial::from_ints(&c))
    }

    #[test]
    fn trims_leading_zeros() {
        let p = ExactPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ExactPolynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn displays_readably() {
        assert_eq!(ExactPolynomial::from_ints(&[0, 1, -1, 1]).to_string(), "x^3 - x^2 + x");
        assert_eq!(ExactPolynomial::from_ints(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(ExactPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        // x^4 + x = x (x + 1)(x^2 - x + 1)
        let p = ExactPolynomial::from_ints(&[0, 1, 0, 0, 1]);
        let (q, r) = p.div_rem(&ExactPolynomial::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, ExactPolynomial::from_ints(&[0, 1, -1, 1]));
    }

    #[test]
    fn limit_cancels_removable_singularity() {
        // (t^2 + 2t) / (3t) -> 2/3
        let f = RationalFunction::quotient(ExactPolynomial::from_ints(&[0, 2, 1]), ExactPolynomial::from_ints(&[0, 3]));
        assert_eq!(f.limit_at_zero(), LimitAtZero::Finite(ratio(2, 3)));
        let g = RationalFunction::quotient(ExactPolynomial::from_ints(&[1]), ExactPolynomial::from_ints(&[0, 1]));
        assert_eq!(g.limit_at_zero(), LimitAtZero::Pole);
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -5i64..5) {
            let x = int(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.compose(&b).eval(&x), a.eval(&b.eval(&x)));
        }
    }
}
