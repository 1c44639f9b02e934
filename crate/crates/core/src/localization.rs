//! Bott residue sums over isolated fixed points.
//!
//! For an almost-complex profile a symmetric function `f` of degree at most `n`
//! localizes to `sum_i f(k^(i)) / prod_j k_j^(i)`; the same sum over the squared
//! weights gives Pontrjagin numbers on the smooth side. Sums of degree below
//! `n` vanish on any genuine action, and top-degree sums are integers; both
//! facts are audited here with exact values.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::model::{FixedPointProfile, Partition, Structure};
use crate::symfunc::{partitions_of, SymmetricFunctionSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Chern,
    Pontrjagin,
}

impl Flavor {
    pub fn of(structure: Structure) -> Flavor {
        match structure {
            Structure::AlmostComplex => Flavor::Chern,
            Structure::Smooth => Flavor::Pontrjagin,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Chern => "chern",
            Flavor::Pontrjagin => "pontrjagin",
        }
    }

    /// Cohomological degree (in units of `deg x_i = 1`) of one unit of partition weight.
    pub fn degree_scale(self) -> usize {
        match self {
            Flavor::Chern => 1,
            Flavor::Pontrjagin => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicNumber {
    pub partition: Partition,
    pub value: BigRational,
    pub flavor: Flavor,
    pub integral: bool,
}

impl CharacteristicNumber {
    fn new(partition: Partition, value: BigRational, flavor: Flavor) -> Self {
        let integral = value.is_integer();
        CharacteristicNumber {
            partition,
            value,
            flavor,
            integral,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.partition.to_string(),
            "value": self.value.to_string(),
            "integral": self.integral,
        })
    }
}

impl fmt::Display for CharacteristicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.flavor {
            Flavor::Chern => 'c',
            Flavor::Pontrjagin => 'p',
        };
        write!(f, "{sym}[{}] = {}", self.partition, self.value)
    }
}

/// `sum_i f(k^(i)) / prod_j k_j^(i)`, with `f` evaluated on squared weights for
/// smooth profiles.
pub fn residue_sum(profile: &FixedPointProfile, spec: &SymmetricFunctionSpec) -> Result<BigRational> {
    let squared = profile.structure == Structure::Smooth;
    let mut total = BigRational::zero();
    for point in &profile.points {
        let num = spec.at_point(point, squared)?;
        if num.is_zero() {
            continue;
        }
        total += BigRational::new(num, point.euler());
    }
    Ok(total)
}

fn check_degree(profile: &FixedPointProfile, lambda: &Partition, flavor: Flavor) -> Result<()> {
    let degree = lambda.weight() * flavor.degree_scale();
    if degree > profile.half_dimension {
        return Err(Error::DegreeTooHigh {
            degree,
            half_dimension: profile.half_dimension,
        });
    }
    Ok(())
}

/// `c_λ[M]` by localization.
pub fn chern_number(profile: &FixedPointProfile, lambda: &Partition) -> Result<CharacteristicNumber> {
    profile.require(Structure::AlmostComplex)?;
    check_degree(profile, lambda, Flavor::Chern)?;
    let spec = SymmetricFunctionSpec::ElementaryProduct(lambda.clone());
    let value = residue_sum(profile, &spec)?;
    Ok(CharacteristicNumber::new(lambda.clone(), value, Flavor::Chern))
}

/// `p_λ[N]` by localization.
pub fn pontrjagin_number(
    profile: &FixedPointProfile,
    lambda: &Partition,
) -> Result<CharacteristicNumber> {
    profile.require(Structure::Smooth)?;
    check_degree(profile, lambda, Flavor::Pontrjagin)?;
    let spec = SymmetricFunctionSpec::ElementaryProduct(lambda.clone());
    let value = residue_sum(profile, &spec)?;
    Ok(CharacteristicNumber::new(lambda.clone(), value, Flavor::Pontrjagin))
}

pub fn all_chern_numbers(profile: &FixedPointProfile) -> Result<Vec<CharacteristicNumber>> {
    profile.require(Structure::AlmostComplex)?;
    partitions_of(profile.half_dimension)
        .iter()
        .map(|l| chern_number(profile, l))
        .collect()
}

/// Top Pontrjagin numbers; empty when the half dimension is odd.
pub fn all_pontrjagin_numbers(profile: &FixedPointProfile) -> Result<Vec<CharacteristicNumber>> {
    profile.require(Structure::Smooth)?;
    if profile.half_dimension % 2 == 1 {
        return Ok(Vec::new());
    }
    partitions_of(profile.half_dimension / 2)
        .iter()
        .map(|l| pontrjagin_number(profile, l))
        .collect()
}

/// Characteristic numbers of the profile's own flavor.
pub fn all_numbers(profile: &FixedPointProfile) -> Result<Vec<CharacteristicNumber>> {
    match profile.structure {
        Structure::AlmostComplex => all_chern_numbers(profile),
        Structure::Smooth => all_pontrjagin_numbers(profile),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A sum of degree below the dimension is nonzero.
    NonVanishing,
    /// A residue sum is not an integer.
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub spec: SymmetricFunctionSpec,
    pub value: BigRational,
}

impl Violation {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": match self.kind {
                ViolationKind::NonVanishing => "nonvanishing",
                ViolationKind::NonIntegral => "nonintegral",
            },
            "spec": self.spec.to_string(),
            "value": self.value.to_string(),
        })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.spec {
            SymmetricFunctionSpec::One => "f = 1".to_string(),
            other => format!("λ=({other})"),
        };
        match self.kind {
            ViolationKind::NonVanishing => write!(f, "sum for {what} should vanish but is {}", self.value),
            ViolationKind::NonIntegral => write!(f, "sum for {what} is not an integer: {}", self.value),
        }
    }
}

/// Every spec whose degree is at most `max_degree`, the constant function first,
/// then partitions by increasing weight.
fn specs_up_to(profile: &FixedPointProfile, max_degree: usize) -> Vec<SymmetricFunctionSpec> {
    let scale = Flavor::of(profile.structure).degree_scale();
    std::iter::once(SymmetricFunctionSpec::One)
        .chain(
            (1..)
                .take_while(|w| w * scale <= max_degree)
                .flat_map(partitions_of)
                .map(SymmetricFunctionSpec::ElementaryProduct),
        )
        .collect()
}

/// Residue sums of degree strictly less than the half dimension that fail to vanish.
/// The constant function is included.
pub fn vanishing_audit(profile: &FixedPointProfile) -> Result<Vec<Violation>> {
    if profile.half_dimension == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for spec in specs_up_to(profile, profile.half_dimension - 1) {
        let value = residue_sum(profile, &spec)?;
        if !value.is_zero() {
            out.push(Violation {
                kind: ViolationKind::NonVanishing,
                spec,
                value,
            });
        }
    }
    Ok(out)
}

/// Residue sums of degree at most the half dimension whose value is not an integer.
pub fn integrality_audit(profile: &FixedPointProfile) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for spec in specs_up_to(profile, profile.half_dimension) {
        let value = residue_sum(profile, &spec)?;
        if !value.is_integer() {
            out.push(Violation {
                kind: ViolationKind::NonIntegral,
                spec,
                value,
            });
        }
    }
    Ok(out)
}

/// Table of characteristic numbers plus both audits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport {
    pub flavor: Flavor,
    pub entries: Vec<CharacteristicNumber>,
    pub violations: Vec<Violation>,
}

impl LocalizationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "flavor": self.flavor.as_str(),
            "entries": self.entries.iter().map(CharacteristicNumber::to_json).collect::<Vec<_>>(),
            "violations": self.violations.iter().map(Violation::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn localization_report(profile: &FixedPointProfile) -> Result<LocalizationReport> {
    let mut violations = vanishing_audit(profile)?;
    violations.extend(integrality_audit(profile)?);
    Ok(LocalizationReport {
        flavor: Flavor::of(profile.structure),
        entries: all_numbers(profile)?,
        violations,
    })
}

#[cfg(test)]
pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(v))
}
