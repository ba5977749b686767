//! The base field: arbitrary precision rationals.
//!
//! `BigRational` keeps numerator and denominator coprime with a positive
//! denominator, which is exactly the invariant we need, so it is used as is.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators (non-negative); zero for an empty or all-zero input.
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

/// Scalar that turns the given coefficients into coprime integers.
pub fn primitive_scale<'a>(values: impl IntoIterator<Item = &'a Rational> + Clone) -> Rational {
    let l = denominator_lcm(values.clone());
    let scaled: Vec<Rational> = values
        .into_iter()
        .map(|v| v * Rational::from_integer(l.clone()))
        .collect();
    let g = numerator_gcd(scaled.iter());
    if g.is_zero() {
        return Rational::one();
    }
    Rational::new(l, g)
}

pub fn is_integer(v: &Rational) -> bool {
    v.denom().is_one()
}

pub fn abs(v: &Rational) -> Rational {
    v.abs()
}
