//! Exact rationals over arbitrary-precision integers.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, prints `p/q` (or `p` when `q = 1`) and parses the same
//! text back, so it is used directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Rational {
    Rational::new(p.into(), q.into())
}

/// `1/x` for a nonzero integer.
pub fn recip(x: &BigInt) -> Rational {
    Rational::new(BigInt::one(), x.clone())
}

/// The integer value of `x` when `x` is an integer.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.numer().clone())
}

/// `x` when it is a positive integer.
pub fn as_positive_integer(x: &Rational) -> Option<BigInt> {
    as_integer(x).filter(|v| v.is_positive())
}

/// `floor(x * d)` for an integer `d`.
pub fn floor_times(x: &Rational, d: &BigInt) -> BigInt {
    (x.numer() * d).div_floor(x.denom())
}

/// Parses `p/q` or `p`. Zero denominators and stray text are rejected.
pub fn parse(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("not a rational: {text:?}"))?;
    let q: BigInt = q.parse().map_err(|_| format!("not a rational: {text:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(p, q))
}
