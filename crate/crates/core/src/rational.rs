//! Exact rationals and their `"p/q"` text form.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serializer};

pub type Rational = Ratio<i128>;

pub fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// Always `p/q` in lowest terms with a positive denominator, e.g. `27/1`.
pub fn to_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn from_text(s: &str) -> Option<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    if q == 0 {
        return None;
    }
    Some(Rational::new(p, q))
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_text(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    from_text(&s).ok_or_else(|| serde::de::Error::custom(format!("invalid rational `{s}`")))
}
