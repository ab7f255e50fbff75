//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational carrier for eigenvalues and matrix entries. Always kept in
/// lowest terms with a positive denominator.
pub type ExactScalar = BigRational;

pub fn int(v: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^e` for a non-negative exponent.
pub fn sign(odd: bool) -> ExactScalar {
    if odd {
        -ExactScalar::one()
    } else {
        ExactScalar::one()
    }
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn serialize_rational(x: &ExactScalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<ExactScalar> {
    let t = text.trim();
    let err = || Error::RationalSyntax(text.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(ExactScalar::new(n, d))
}

/// Bit size of numerator plus denominator, used as a pivot-quality measure.
pub fn bit_size(x: &ExactScalar) -> u64 {
    x.numer().abs().bits() + x.denom().bits()
}
