//! Exact rational scalars and vectors.
//!
//! All coordinates in this crate are `BigRational` values; text form is
//! always `p/q` (or `p` when the denominator is one), never decimals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigRational, Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Error for malformed rational literals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal `{0}` (expected `p` or `p/q`)")]
pub struct RationalParseError(pub String);

/// Parses a `p/q` (or plain integer) literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat, RationalParseError> {
    let t = s.trim();
    Rat::from_str(t).map_err(|_| RationalParseError(t.to_owned()))
}

/// Shorthand constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(numer.into(), denom.into())
}

/// Shorthand constructor for small integers as rationals.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// A vector with exact rational coordinates in a fixed ambient space.
///
/// Arithmetic panics on dimension mismatch; callers that accept untrusted
/// dimensions go through [`crate::rootdata::pairing`] or
/// [`crate::rootdata::RootDatum::point`], which return errors instead.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalVector(Vec<Rat>);

impl RationalVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RationalVector(coords)
    }

    /// Builds a vector from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| rint(c)).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_pairs(coords: &[(i64, i64)]) -> Self {
        RationalVector(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// Parses a vector from `p/q` literals.
    pub fn parse(coords: &[&str]) -> Result<Self, RationalParseError> {
        coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map(RationalVector)
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Exact dot product; panics on dimension mismatch (internal use).
    pub fn dot(&self, other: &Self) -> Rat {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dot product dimension mismatch: {} vs {}",
            self.dim(),
            other.dim()
        );
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Coordinates halved — convenient for `½h` constructions.
    pub fn halved(&self) -> Self {
        self.scale(&rat(1, 2))
    }

    /// True when every coordinate is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Renders as `(a, b, c)` with `p/q` coordinate literals.
    pub fn to_tuple_string(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(", "))
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tuple_string())
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tuple_string())
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), other.dim(), "vector sum dimension mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), other.dim(), "vector difference dimension mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rat> for &RationalVector {
    type Output = RationalVector;
    fn mul(self, c: &Rat) -> RationalVector {
        self.scale(c)
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct VecVisitor;
        impl<'de> Visitor<'de> for VecVisitor {
            type Value = RationalVector;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of rational literals")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coords = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    coords.push(parse_rational(&s).map_err(serde::de::Error::custom)?);
                }
                Ok(RationalVector(coords))
            }
        }
        deserializer.deserialize_seq(VecVisitor)
    }
}
