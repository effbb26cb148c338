//! Numeric abstraction shared by every game, value and check.
//!
//! Worths and payoffs are generic over [`Scalar`]. Floating-point scalars
//! compare with a relative tolerance; rational scalars compare exactly.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Relative tolerance used by floating-point comparisons.
pub const REL_TOL: f64 = 1e-9;

pub trait Scalar:
    Clone
    + Debug
    + Display
    + FromStr
    + PartialOrd
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// True for scalar types whose arithmetic is exact.
    const EXACT: bool;

    /// Equality used by classifiers and axiom checks.
    fn approx_eq(&self, other: &Self) -> bool;

    fn from_int(value: i64) -> Self;

    fn from_count(value: usize) -> Self {
        Self::from_int(value as i64)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn approx_zero(&self) -> bool {
        self.approx_eq(&Self::zero())
    }
}

fn float_close(a: f64, b: f64, tol: f64) -> bool {
    if a == b {
        return true;
    }
    let scale = 1.0_f64.max(a.abs()).max(b.abs());
    (a - b).abs() <= tol * scale
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn approx_eq(&self, other: &Self) -> bool {
        float_close(*self, *other, REL_TOL)
    }

    fn from_int(value: i64) -> Self {
        value as f64
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    // 1e-9 is below f32 resolution; use a tolerance a few ulps wide instead.
    fn approx_eq(&self, other: &Self) -> bool {
        float_close(f64::from(*self), f64::from(*other), 1e-5)
    }

    fn from_int(value: i64) -> Self {
        value as f32
    }
}

impl Scalar for Rational64 {
    const EXACT: bool = true;

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn from_int(value: i64) -> Self {
        Rational64::from_integer(value)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

/// Sums an iterator of borrowed scalars.
pub fn sum<'a, T: Scalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values
        .into_iter()
        .fold(T::zero(), |acc, v| acc + v.clone())
}

/// Parses a scalar from its own textual form, or from a decimal literal
/// such as `-12.5` or `3e2`, which exact types read exactly.
pub fn parse_scalar<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    if let Ok(x) = text.parse::<T>() {
        return Some(x);
    }
    if let Some((num, den)) = text.split_once('/') {
        let den: T = parse_decimal(den)?;
        return (!den.is_zero()).then(|| parse_decimal::<T>(num).map(|n| n / den))?;
    }
    parse_decimal(text)
}

fn parse_decimal<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let ten = T::from_int(10);
    let mut value = T::zero();
    for c in int_part.chars().chain(frac_part.chars()) {
        value = value * ten.clone() + T::from_int(i64::from(c.to_digit(10)?));
    }
    let shift = exponent.checked_sub(frac_part.len() as i32)?;
    if shift.unsigned_abs() > 400 {
        return None;
    }
    for _ in 0..shift.unsigned_abs() {
        value = if shift > 0 {
            value * ten.clone()
        } else {
            value / ten.clone()
        };
    }
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals_parse_exactly() {
        assert_eq!(parse_scalar::<Rational64>("12.5"), Some(Rational64::new(25, 2)));
        assert_eq!(parse_scalar::<Rational64>("-0.1"), Some(Rational64::new(-1, 10)));
        assert_eq!(parse_scalar::<Rational64>("3e2"), Some(Rational64::from_integer(300)));
        assert_eq!(parse_scalar::<Rational64>("1/3"), Some(Rational64::new(1, 3)));
        assert_eq!(parse_scalar::<f64>("1.5e-3"), Some(0.0015));
        assert_eq!(parse_scalar::<f64>("13/2"), Some(6.5));
        assert_eq!(parse_scalar::<Rational64>("0.5/3"), Some(Rational64::new(1, 6)));
        assert_eq!(parse_scalar::<f64>("1/0"), None);
        assert_eq!(parse_scalar::<Rational64>("1.2.3"), None);
        assert_eq!(parse_scalar::<Rational64>("."), None);
        assert_eq!(parse_scalar::<Rational64>("abc"), None);
    }

    #[test]
    fn float_tolerance_is_relative() {
        assert!(1e12_f64.approx_eq(&(1e12 + 1e2)));
        assert!(!1e12_f64.approx_eq(&(1e12 + 1e4)));
        assert!(0.0_f64.approx_eq(&1e-10));
        assert!(!0.0_f64.approx_eq(&1e-8));
    }

    #[test]
    fn rationals_compare_exactly() {
        let third = Rational64::new(1, 3);
        assert!(third.approx_eq(&Rational64::new(2, 6)));
        assert!(!third.approx_eq(&Rational64::new(333_333_333, 1_000_000_000)));
        let big = BigRational::from_int(7);
        assert!(big.approx_eq(&BigRational::from_int(7)));
    }

    #[test]
    fn sum_of_borrowed() {
        let v = vec![1.5_f64, 2.5, -1.0];
        assert_eq!(sum(&v), 3.0);
    }
}
