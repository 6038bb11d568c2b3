//! Exact rational scalars.
//!
//! Every scalar in the crate is a [`Q`], an arbitrary precision rational.
//! The textual form is `p/q` (or just `p` for integers), which is also the
//! serialized form: floats never appear.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `p`, `-p`, `p/q`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Clears denominators of a rational vector, returning a primitive integer vector
/// that spans the same line.
pub fn to_primitive_integers(v: &[Q]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(den.clone())).to_integer())
        .collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in out.iter_mut() {
            *x /= &g;
        }
    }
    out
}

/// Largest integer r with r^n <= c, for c >= 0.
pub fn floor_nth_root(c: &BigInt, n: u32) -> BigInt {
    assert!(!c.is_negative(), "root of a negative integer");
    c.nth_root(n)
}

/// Exact rational bracket `[lo, hi]` with `lo^n <= c <= hi^n` and
/// `hi - lo <= 1/precision`; `lo == hi` when `c` is a perfect n-th power.
pub fn nth_root_bracket(c: &BigInt, n: u32, precision: u64) -> (Q, Q) {
    let p = BigInt::from(precision);
    let scaled = c * num_traits::pow(p.clone(), n as usize);
    let r = floor_nth_root(&scaled, n);
    let lo = Q::new(r.clone(), p.clone());
    if num_traits::pow(r.clone(), n as usize) == scaled {
        (lo.clone(), lo)
    } else {
        (lo, Q::new(r + 1, p))
    }
}

pub fn to_f64_lossy(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Serde adapters writing rationals as `p/q` strings.
pub mod serde_q {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&format_q(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Q>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_q(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod nested_vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
            let strings: Vec<Vec<String>> = xs.iter().map(|v| v.iter().map(format_q).collect()).collect();
            serde::Serialize::serialize(&strings, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
            let v = Vec::<Vec<String>>::deserialize(d)?;
            v.iter()
                .map(|row| {
                    row.iter()
                        .map(|s| parse_q(s).map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }

    pub mod option_vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            xs: &Option<Vec<Q>>,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            match xs {
                Some(v) => s.serialize_some(&v.iter().map(format_q).collect::<Vec<_>>()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Option<Vec<Q>>, D::Error> {
            let v = Option::<Vec<String>>::deserialize(d)?;
            v.map(|v| {
                v.iter()
                    .map(|s| parse_q(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-6/4").unwrap(), qf(-3, 2));
        assert_eq!(format_q(&qf(-3, 2)), "-3/2");
        assert_eq!(format_q(&q(0)), "0");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn primitive_integers() {
        let v = vec![qf(1, 2), qf(-3, 4), q(0)];
        let w = to_primitive_integers(&v);
        assert_eq!(w, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    #[test]
    fn root_bracket() {
        let (lo, hi) = nth_root_bracket(&BigInt::from(1), 5, 1000);
        assert_eq!(lo, q(1));
        assert_eq!(hi, q(1));
        let (lo, hi) = nth_root_bracket(&BigInt::from(8), 4, 1000);
        // 8^(1/4) = 1.6817...
        assert_eq!(lo, qf(1681, 1000));
        assert_eq!(hi, qf(1682, 1000));
        assert!(num_traits::pow(lo, 4) <= q(8));
        assert!(num_traits::pow(hi, 4) >= q(8));
    }
}
