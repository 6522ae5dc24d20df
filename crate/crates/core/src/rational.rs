//! Exact rational scalars and their text form (`"p/q"` or `"p"`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar field used everywhere. No floating point enters the engine.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Q {
    frac(1, 2)
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Decimal points are rejected.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an integer or a fraction p/q"));
    if s.is_empty() || s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Q::new(num, den))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise (reduced, q > 0).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `serialize_with` helper writing a scalar as its canonical text.
pub fn serialize_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub fn fmt_coords(coords: &[Q]) -> String {
    let inner: Vec<String> = coords.iter().map(fmt_q).collect();
    format!("({})", inner.join(", "))
}

/// Integer value of `x` if it is an integer that fits in `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

pub fn is_natural(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

pub fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}
