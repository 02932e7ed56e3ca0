//! Exact rational helpers shared across the crate.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `num / den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses an integer literal or `p/q` with `q > 0`.
pub fn parse_rational(token: &str) -> Result<Rational, String> {
    let parse_int = |s: &str| {
        if s.is_empty() || s.starts_with('+') {
            return Err(format!("malformed rational `{token}`"));
        }
        BigInt::from_str(s).map_err(|_| format!("malformed rational `{token}`"))
    };
    match token.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(token)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if !q.is_positive() {
                return Err(format!("denominator of `{token}` must be positive"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Midpoint of two rationals.
pub fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / int(2)
}

pub(crate) fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

pub(crate) fn zero() -> Rational {
    Rational::zero()
}
