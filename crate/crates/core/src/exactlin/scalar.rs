//! Exact rational scalars.
//!
//! `Scalar` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. On the wire every scalar is a string `"p/q"`, or
//! `"p"` when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::ParseScalar(s.to_string()))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::ParseScalar(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::ParseScalar(s.to_string()));
        }
        Ok(Scalar::new(n, d))
    } else {
        let n = BigInt::from_str(t).map_err(|_| Error::ParseScalar(s.to_string()))?;
        Ok(Scalar::from_integer(n))
    }
}

pub fn format_scalar(x: &Scalar) -> String {
    // Ratio's Display already prints "p" for q = 1 and "p/q" otherwise.
    x.to_string()
}

/// Serde adapter: a single scalar as a `"p/q"` string.
pub mod serde_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_scalar, parse_scalar, Scalar};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let raw = ScalarLit::deserialize(d)?;
        raw.into_scalar().map_err(D::Error::custom)
    }

    /// Accept `"p/q"` strings and, leniently, bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum ScalarLit {
        Str(String),
        Int(i64),
    }

    impl ScalarLit {
        pub(crate) fn into_scalar(self) -> Result<Scalar, String> {
            match self {
                ScalarLit::Str(s) => parse_scalar(&s).map_err(|e| e.to_string()),
                ScalarLit::Int(i) => Ok(super::int(i)),
            }
        }
    }
}

/// Serde adapter: a flat vector of scalars.
pub mod serde_vec {
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    use super::serde_str::ScalarLit;
    use super::{format_scalar, Scalar};

    pub fn serialize<S: Serializer>(xs: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(format_scalar).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        let raw = Vec::<ScalarLit>::deserialize(d)?;
        raw.into_iter()
            .map(|x| x.into_scalar().map_err(D::Error::custom))
            .collect()
    }
}

/// Serde adapter: a list of scalar vectors.
pub mod serde_vecs {
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    use super::serde_str::ScalarLit;
    use super::{format_scalar, Scalar};

    pub fn serialize<S: Serializer>(xs: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
        xs.iter()
            .map(|v| v.iter().map(format_scalar).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Scalar>>, D::Error> {
        let raw = Vec::<Vec<ScalarLit>>::deserialize(d)?;
        raw.into_iter()
            .map(|v| v.into_iter().map(|x| x.into_scalar().map_err(D::Error::custom)).collect())
            .collect()
    }
}
