//! Exact rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseRationalError(pub String);

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-1.25"`.
pub fn parse_q(s: &str) -> Result<Q, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        let whole: BigInt = if ip.is_empty() { BigInt::zero() } else { ip.parse().map_err(|_| err())? };
        let frac: BigInt = fp.parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let mag = Q::new(whole * &scale + frac, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(Q::from_integer(n))
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // numerator/denominator beyond f64 range; scale both down
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// A rational not exceeding `x`, at most `1e-9` relative below it.
pub fn rational_below(x: f64) -> Q {
    if !x.is_finite() {
        return Q::zero();
    }
    let scale = 1_000_000_000i64;
    let v = (x * scale as f64).floor();
    if v.abs() > 9.0e18 {
        return Q::from_float(x).unwrap_or_else(Q::zero);
    }
    Q::new(BigInt::from(v as i64), BigInt::from(scale))
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn sign(x: &Q) -> i32 {
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

/// Display adapter for slices of rationals.
pub struct QList<'a>(pub &'a [Q]);

impl fmt::Display for QList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_q(x))?;
        }
        write!(f, "]")
    }
}

/// Serde adapter for rationals written as strings.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3/6").unwrap(), q_frac(1, 2));
        assert_eq!(parse_q("-7").unwrap(), q(-7));
        assert_eq!(parse_q("-1.25").unwrap(), q_frac(-5, 4));
        assert_eq!(parse_q(".5").unwrap(), q_frac(1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert!(parse_q("1.").is_err());
    }

    #[test]
    fn format_roundtrip() {
        for s in ["0", "-3", "5/7", "-22/7"] {
            assert_eq!(format_q(&parse_q(s).unwrap()), s);
        }
    }

    #[test]
    fn below_is_below() {
        for x in [0.1, 1.0 / 3.0, -2.5, 1e6 + 0.123] {
            assert!(to_f64(&rational_below(x)) <= x);
        }
    }
}
