//! Exact rational scalars.
//!
//! Every coordinate in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (reduced, positive denominator), so that
//! equality is structural and arithmetic never rounds. Floating point is
//! never used in a predicate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Canonical arbitrary-precision rational. `num_rational` keeps the value
/// reduced with a positive denominator, which is exactly the invariant the
/// rest of the crate relies on for hashing and structural equality.
pub type Rational = BigRational;

/// Shorthand for `n/d` used throughout tests and constructors.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Whole-number rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal: {0:?}")]
    BadNumerator(String),
    #[error("invalid denominator in rational literal: {0:?}")]
    BadDenominator(String),
    #[error("denominator must be a positive integer, got {0:?}")]
    ZeroDenominator(String),
}

/// Parse the text syntax shared by every interface of this crate:
/// an optional sign, a decimal integer, optionally followed by `/` and a
/// positive decimal integer. Examples: `-7/3`, `2`, `+1/2`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadNumerator(num_str.to_owned()))?;
    let denom: BigInt = match den_str {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRationalError::BadDenominator(d.to_owned()));
            }
            let v: BigInt = d
                .parse()
                .map_err(|_| ParseRationalError::BadDenominator(d.to_owned()))?;
            if v.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(d.to_owned()));
            }
            v
        }
    };
    Ok(Rational::new(numer, denom))
}

/// `Display` for `BigRational` already prints `n/d`, or just `n` when the
/// denominator is 1; this helper exists so call sites read uniformly.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapter: rationals cross every JSON boundary as strings ("3/2"),
/// never as floats, so exactness survives serialization.
pub mod serde_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }
}
