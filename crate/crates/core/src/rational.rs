//! Exact rational scalars.
//!
//! Everything numeric in the crate is a [`Rational`]: a big-integer fraction
//! kept in lowest terms with a positive denominator. Text form is `"p"` for
//! integers and `"p/q"` otherwise.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"`. The fraction must already be in lowest terms with
/// `q > 0`, so that parsing and [`format_rational`] are exact inverses.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let p: BigInt = parse_int(num).ok_or_else(|| Error::parse(format!("bad rational {s:?}")))?;
    let Some(q) = den else {
        return Ok(Rational::from_integer(p));
    };
    let q: BigInt = parse_int(q).ok_or_else(|| Error::parse(format!("bad rational {s:?}")))?;
    if !q.is_positive() {
        return Err(Error::parse(format!("denominator must be positive in {s:?}")));
    }
    let r = Rational::new(p.clone(), q.clone());
    if r.numer() != &p || r.denom() != &q || q.is_one() {
        return Err(Error::parse(format!("rational {s:?} is not in lowest terms")));
    }
    Ok(r)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter writing a rational as its `"p/q"` string.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

/// A JSON scalar that is either a machine integer or a `"p/q"` string.
///
/// Integers that fit in `i64` are written as JSON numbers, everything else as
/// strings. Floats are rejected on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Ok(v) = i64::try_from(self.0.numer()) {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(JsonRational(int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(JsonRational(Rational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Err(E::custom(format!("non-integer number {v}; use a \"p/q\" string")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-7/4").unwrap(), ratio(-7, 4));
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
    }

    #[test]
    fn rejects_non_canonical() {
        for bad in ["2/4", "1/-2", "3/1", "1/0", "", "x", "1.5", "+3", "1/ 2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn json_scalar() {
        let v: Vec<JsonRational> = serde_json::from_str(r#"[4, "-1/3", "12"]"#).unwrap();
        assert_eq!(v[1].0, ratio(-1, 3));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"[4,"-1/3",12]"#);
        assert!(serde_json::from_str::<JsonRational>("1.5").is_err());
    }
}
