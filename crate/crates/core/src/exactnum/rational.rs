//! Rational scalars and points of `M (x) Q`, plus their text and JSON forms.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::{Rational, RationalVector};

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn int_vector(v: &[i64]) -> RationalVector {
    v.iter().map(|&x| int(x)).collect()
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// JSON encoding is always the canonical string form; decoding also accepts
/// bare JSON integers.
pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::InvalidInput(format!("non-integral JSON number {n}"))),
        other => Err(Error::InvalidInput(format!("expected rational, got {other}"))),
    }
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn dot_int(u: &[Rational], v: &[i64]) -> Rational {
    u.iter()
        .zip(v)
        .fold(Rational::zero(), |acc, (a, &b)| acc + a * BigInt::from(b))
}

pub fn add(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Rational], v: &[Rational]) -> RationalVector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(u: &[Rational], c: &Rational) -> RationalVector {
    u.iter().map(|a| a * c).collect()
}

pub fn is_zero_vector(u: &[Rational]) -> bool {
    u.iter().all(|a| a.is_zero())
}

/// Decimal rendering for display only.
pub fn approx(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_forms() {
        assert_eq!(format_rational(&q(-2, 4)), "-1/2");
        assert_eq!(format_rational(&q(6, 3)), "2");
        assert_eq!(parse_rational(" 3/-6 ").unwrap(), q(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_from_json(&serde_json::json!(5)).unwrap(), int(5));
    }

    proptest! {
        #[test]
        fn normalized_and_round_trips(n in -10_000i64..10_000, d in 1i64..10_000, m in -50i64..50, e in 1i64..50) {
            let r = q(n, d);
            prop_assert!(r.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one() || r.is_zero());
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r.clone());
            let s = q(m, e);
            prop_assert_eq!(&r + &s, &s + &r);
            prop_assert_eq!((&r * &s) * &r, &r * (&s * &r));
        }
    }
}
