//! Serde adapter writing rationals as exact `p/q` strings.

use serde::{Deserialize, Deserializer, Serializer};

use super::{format_rational, parse_rational, Rational};

pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let text = String::deserialize(d)?;
    parse_rational(&text).ok_or_else(|| serde::de::Error::custom(format!("bad rational {text:?}")))
}
