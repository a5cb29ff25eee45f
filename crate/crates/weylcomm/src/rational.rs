//! Exact rational scalars.
//!
//! The coefficient field is the rationals, stored in lowest terms with a
//! positive denominator. `num::BigRational` already maintains exactly that
//! canonical form, so it is re-exported here behind the crate's own name
//! together with the textual conventions used by the printers and parsers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a big integer.
pub fn rat_int(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Canonical text form: `num` when the denominator is 1, else `num/den`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den`; the denominator must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in rational `{s}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in rational `{s}`")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in rational `{s}`")));
    }
    Ok(Rat::new(n, d))
}

/// Formats a rational as a coefficient in front of `*x^d` terms:
/// integers print bare, proper fractions print parenthesized.
pub fn fmt_coeff(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

/// Accepts the output of [`fmt_coeff`] (optionally parenthesized).
pub fn parse_coeff(s: &str) -> Result<Rat> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    parse_rat(s)
}

/// True when the rational is a (not necessarily positive) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Extracts the integer value, erroring if the rational is not integral.
pub fn to_integer(r: &Rat) -> Result<BigInt> {
    if is_integer(r) {
        Ok(r.numer().clone())
    } else {
        Err(Error::InexactDivision(format!(
            "expected an integer, got {}",
            fmt_rat(r)
        )))
    }
}

/// Sign as -1, 0 or 1.
pub fn signum(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
