//! Exact rationals and their JSON string encoding (`"p/q"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn half() -> Rat {
    rat(1, 2)
}

pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / int(2)
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(v: &Rat) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Reduce `t` into `[0, 1)`.
pub fn frac(t: &Rat) -> Rat {
    t - t.floor()
}

pub fn cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rat(v: &Rat) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Lossy conversion for presentation only.
pub fn to_f64(v: &Rat) -> f64 {
    let n: f64 = v.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = v.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// `#[serde(with = "rat_str")]` for a single rational.
pub mod rat_str {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let raw = RatRepr::deserialize(d)?;
        match raw {
            RatRepr::Str(s) => parse_rat(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))),
            RatRepr::Int(i) => Ok(super::int(i)),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RatRepr {
        Str(String),
        Int(i64),
    }
}

/// `#[serde(with = "rat_pair")]` for `(Rat, Rat)` encoded as `["p/q","p/q"]`.
pub mod rat_pair {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de::Error, ser::SerializeTuple, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &(Rat, Rat), s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&format_rat(&v.0))?;
        t.serialize_element(&format_rat(&v.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(Rat, Rat), D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let pa = parse_rat(&a).ok_or_else(|| D::Error::custom(format!("bad rational {a:?}")))?;
        let pb = parse_rat(&b).ok_or_else(|| D::Error::custom(format!("bad rational {b:?}")))?;
        Ok((pa, pb))
    }
}
