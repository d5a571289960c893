//! Exact rational helpers.
//!
//! Weights are `BigRational` values, which num-rational keeps reduced with a
//! positive denominator. The textual form is `int` or `int/int`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    InvalidInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Parses `int` or `int/int` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (parse_int(n)?, parse_int(d)?),
        None => (parse_int(text)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

fn parse_int(text: &str) -> Result<BigInt, RationalParseError> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::InvalidInteger(text.to_string()));
    }
    text.parse::<BigInt>()
        .map_err(|_| RationalParseError::InvalidInteger(text.to_string()))
}

/// Renders a rational as `n` or `n/d` in lowest terms.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

/// Product of a slice of rationals; the empty product is one.
pub fn product<'a, I>(values: I) -> Rational
where
    I: IntoIterator<Item = &'a Rational>,
{
    values.into_iter().fold(Rational::one(), |acc, v| acc * v)
}

/// Lexicographic comparison of two weight words by value.
pub fn compare_words(lhs: &[Rational], rhs: &[Rational]) -> std::cmp::Ordering {
    for (a, b) in lhs.iter().zip(rhs) {
        match a.cmp(b) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    lhs.len().cmp(&rhs.len())
}
