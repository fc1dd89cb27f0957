//! Exact rational scalars and their textual form.
//!
//! Every weight, utility and welfare value in the crate is a [`Rational`]
//! (an arbitrary-precision, always-reduced fraction). The textual form used
//! in JSON is `"p/q"` or a plain integer; decimal literals such as `"0.25"`
//! are accepted on input and converted exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parse `"p/q"`, `"p"`, or a finite decimal literal (`"-0.125"`, `"1e-3"` is not accepted).
pub fn parse(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let den = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal literal {text:?}")));
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if whole_digits.is_empty() { "0" } else { whole_digits }, frac);
        let mut num = BigInt::from_str(&digits)
            .map_err(|_| Error::Parse(format!("bad decimal literal {text:?}")))?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    BigInt::from_str(s)
        .map(Rational::from_integer)
        .map_err(|_| Error::Parse(format!("bad rational literal {text:?}")))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise (always reduced).
pub fn format(value: &Rational) -> String {
    value.to_string()
}

/// Convert a JSON number exactly. Integers map directly; floats go through
/// their shortest round-trip decimal form, so `0.1` becomes `1/10`.
pub fn from_json_number(n: &serde_json::Number) -> Result<Rational> {
    if let Some(i) = n.as_i64() {
        return Ok(int(i));
    }
    if let Some(u) = n.as_u64() {
        return Ok(Rational::from_integer(BigInt::from(u)));
    }
    let f = n
        .as_f64()
        .filter(|f| f.is_finite())
        .ok_or_else(|| Error::Parse(format!("non-finite number {n}")))?;
    let text = format!("{f}");
    if text.contains(['e', 'E']) {
        // Very large or small magnitudes: fall back to the exact binary value.
        return Rational::from_float(f).ok_or_else(|| Error::Parse(format!("bad number {n}")));
    }
    parse(&text)
}

/// Ceiling of a rational as an integer-valued rational.
pub fn ceil(value: &Rational) -> Rational {
    let (q, r) = value.numer().div_mod_floor(value.denom());
    if r.is_zero() {
        Rational::from_integer(q)
    } else {
        Rational::from_integer(q + 1)
    }
}

pub fn abs(value: &Rational) -> Rational {
    value.abs()
}

/// Serde adapter storing a rational as its canonical string.
pub mod as_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        super::from_json_value(&v).map_err(serde::de::Error::custom)
    }
}

/// Accepts either a string literal or a JSON number.
pub fn from_json_value(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::String(s) => parse(s),
        serde_json::Value::Number(n) => from_json_number(n),
        other => Err(Error::Parse(format!("expected rational, found {other}"))),
    }
}
