//! Exact rational helpers and the `"p/q"` string encoding used in JSON.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(x: T) -> Rational {
    Rational::from_integer(x.into())
}

pub fn frac<T: Into<BigInt>>(p: T, q: T) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Always `p/q` with `q >= 1`, so integers read as `7314/1`.
pub fn to_pq(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_pq(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(int(s.parse::<BigInt>().ok()?)),
    }
}

pub fn is_minus_one(x: &Rational) -> bool {
    *x == -Rational::one()
}

pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_pq(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`")))
}

/// Big integers as decimal strings, for `#[serde(with = "rational::decimal")]`.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("bad integer `{s}`")))
    }
}
