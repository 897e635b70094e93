//! Numeric carriers for the tensor pipeline.
//!
//! The exact path works over arbitrary-precision rationals; every identity
//! check in the crate is an exact structural equality on [`Rational`]
//! values. A parallel `f64` instantiation of the same pipeline exists for
//! large sweeps and is compared against the exact path by the test suite.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational in canonical form (reduced, denominator > 0).
///
/// Canonicalisation is maintained by `num_rational` on every operation, so
/// equality is structural.
pub type Rational = num_rational::BigRational;

/// Scalar type the geometric pipeline is generic over.
///
/// [`Rational`] is the primary, exact instantiation; `f64` backs the
/// floating evaluation mode used for large sweeps.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    /// `self / 2`, the only constant division the pipeline needs.
    fn half(&self) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn half(&self) -> Self {
        self / Rational::from_integer(BigInt::from(2))
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn half(&self) -> Self {
        self * 0.5
    }
}

/// Shorthand for `Rational::from_integer(n.into())`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds `p/q` exactly; panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational {
        input: s.to_string(),
    };
    let trimmed = s.trim();
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| err())?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-5/2").unwrap(), ratio(-5, 2));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), ratio(2, 3));
    }

    #[test]
    fn parse_normalizes_sign_and_gcd() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(r, ratio(-3, 2));
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn parse_format_round_trip() {
        for s in ["0", "7", "-3", "1/3", "-7/9", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }
}
