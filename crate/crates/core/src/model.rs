//! Fixed-point weight profiles of circle actions and the catalog of known actions.
//!
//! A profile records, for each isolated fixed point, the integer weights of the
//! isotropy representation on the tangent space. Nothing else about the manifold
//! is stored: every characteristic number downstream is computed from these
//! weights alone.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which tangential structure the action preserves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Structure {
    AlmostComplex,
    Smooth,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::AlmostComplex => f.write_str("almost-complex"),
            Structure::Smooth => f.write_str("smooth"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(with = "json_ints")]
    pub weights: Vec<BigInt>,
}

impl FixedPoint {
    pub fn new<I, W>(weights: I) -> Self
    where
        I: IntoIterator<Item = W>,
        W: Into<BigInt>,
    {
        FixedPoint {
            label: None,
            weights: weights.into_iter().map(Into::into).collect(),
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Product of the weights, the Euler class of the isotropy representation.
    pub fn euler(&self) -> BigInt {
        self.weights.iter().product()
    }

    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|k| k.is_negative()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointProfile {
    pub structure: Structure,
    pub half_dimension: usize,
    #[serde(rename = "fixed_points")]
    pub points: Vec<FixedPoint>,
}

impl FixedPointProfile {
    pub fn new(structure: Structure, half_dimension: usize, points: Vec<FixedPoint>) -> Self {
        FixedPointProfile {
            structure,
            half_dimension,
            points,
        }
    }

    pub fn empty(structure: Structure, half_dimension: usize) -> Self {
        Self::new(structure, half_dimension, Vec::new())
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub(crate) fn require(&self, expected: Structure) -> Result<()> {
        if self.structure == expected {
            Ok(())
        } else {
            Err(Error::WrongStructure {
                expected,
                found: self.structure,
            })
        }
    }

    /// Parses and validates a profile from its JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: FixedPointProfile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        validate_profile(raw)
    }

    /// Compact single-line JSON; parsing and re-serializing reproduces it byte for byte.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serialization is infallible")
    }
}

/// Checks dimension, arity and nonvanishing of every weight.
pub fn validate_profile(profile: FixedPointProfile) -> Result<FixedPointProfile> {
    if profile.half_dimension < 1 {
        return Err(Error::BadDimension(profile.half_dimension));
    }
    for (i, point) in profile.points.iter().enumerate() {
        if point.weights.len() != profile.half_dimension {
            return Err(Error::ArityMismatch {
                point: i,
                expected: profile.half_dimension,
                found: point.weights.len(),
            });
        }
        if let Some(j) = point.weights.iter().position(Zero::is_zero) {
            return Err(Error::ZeroWeight { point: i, index: j });
        }
    }
    Ok(profile)
}

/// Rewrites each point's rotation numbers so that every weight is positive
/// except possibly the first; the sign of the weight product is preserved.
pub fn canonicalize_smooth(profile: &FixedPointProfile) -> Result<FixedPointProfile> {
    profile.require(Structure::Smooth)?;
    let points = profile
        .points
        .iter()
        .map(|p| {
            let flip_first = p.negative_count() % 2 == 1;
            let weights = p
                .weights
                .iter()
                .enumerate()
                .map(|(j, k)| {
                    let a = k.abs();
                    if j == 0 && flip_first {
                        -a
                    } else {
                        a
                    }
                })
                .collect();
            FixedPoint {
                label: p.label.clone(),
                weights,
            }
        })
        .collect();
    Ok(FixedPointProfile::new(
        Structure::Smooth,
        profile.half_dimension,
        points,
    ))
}

/// Linear action `[z_0 : ... : z_n] -> [t^{a_0} z_0 : ... : t^{a_n} z_n]` on CP^n.
///
/// The fixed point `e_i` has weights `a_j - a_i` for `j != i`.
pub fn catalog_cpn(exponents: &[i64]) -> Result<FixedPointProfile> {
    if exponents.len() < 2 {
        return Err(Error::BadParams(format!(
            "CP^n needs at least 2 exponents, got {}",
            exponents.len()
        )));
    }
    let mut seen = HashSet::new();
    for &a in exponents {
        if !seen.insert(a) {
            return Err(Error::DuplicateExponent(a));
        }
    }
    let n = exponents.len() - 1;
    let points = exponents
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let weights = exponents
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &aj)| BigInt::from(aj) - BigInt::from(ai));
            FixedPoint::new(weights).labeled(format!("p{i}"))
        })
        .collect();
    Ok(FixedPointProfile::new(Structure::AlmostComplex, n, points))
}

/// Diagonal action on `(CP^1)^n`: one fixed point per sign vector in `{+1, -1}^n`.
pub fn catalog_product_cp1(n: usize) -> Result<FixedPointProfile> {
    if n < 1 {
        return Err(Error::BadDimension(n));
    }
    if n >= usize::BITS as usize {
        return Err(Error::BadParams(format!("(CP^1)^{n} has too many fixed points")));
    }
    let points = (0..1usize << n)
        .map(|mask| {
            let signs: Vec<i64> = (0..n)
                .map(|j| if mask >> (n - 1 - j) & 1 == 1 { -1 } else { 1 })
                .collect();
            let label: String = signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
            FixedPoint::new(signs).labeled(label)
        })
        .collect();
    Ok(FixedPointProfile::new(Structure::AlmostComplex, n, points))
}

/// Forgets the almost-complex structure; complex weights serve as rotation numbers
/// for the induced orientation.
pub fn as_smooth(profile: &FixedPointProfile) -> Result<FixedPointProfile> {
    profile.require(Structure::AlmostComplex)?;
    Ok(FixedPointProfile {
        structure: Structure::Smooth,
        ..profile.clone()
    })
}

/// Unordered multiset of positive integers, stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::BadPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0[0]
    }

    /// The partition whose parts are those of `self` repeated `times` times,
    /// indexing `(c_{λ_1} ... c_{λ_u})^times`.
    pub fn repeated(&self, times: usize) -> Result<Self> {
        let parts: Vec<usize> = (0..times).flat_map(|_| self.0.iter().copied()).collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::BadPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::BadPartition(s.to_string()))
    }
}

/// Integer lists as plain JSON numbers of any size.
mod json_ints {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            let n = Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<Number>::deserialize(d)?;
        raw.iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| D::Error::custom(format!("weight {n} is not an integer")))
            })
            .collect()
    }
}
