//! Lower bounds on the number of fixed points from a nonvanishing characteristic number.
//!
//! Group the fixed points by the value `s_t` of `c_λ` and let `A_t` be the sum of
//! `1 / prod_j k_j` over each group. Localizing `(c_λ)^i` gives the moments
//! `sum_t s_t^i A_t`, which vanish for every `i < n` when the half dimension is
//! `m n` with `m = |λ|`. If there are at most `n` fixed points those vanishing
//! moments form a nonsingular Vandermonde system in the `A_t`, so all `A_t = 0`
//! and `(c_λ)^n[M] = sum_t s_t^n A_t = 0`. A nonzero `(c_λ)^n[M]` therefore
//! certifies at least `n + 1` fixed points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::localization::{chern_number, pontrjagin_number, Flavor};
use crate::model::{FixedPointProfile, Partition, Structure};
use crate::symfunc::{partitions_of, SymmetricFunctionSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable {
    pub lambda: Partition,
    pub flavor: Flavor,
    /// Distinct values of `c_λ` (or `σ_λ`) over the fixed points, ascending.
    pub distinct_values: Vec<BigInt>,
    /// `A_t` for each distinct value.
    pub residue_sums: Vec<BigRational>,
    /// `sum_t s_t^i A_t` for `i = 0, ..., r - 1`.
    pub moments: Vec<BigRational>,
}

impl MomentTable {
    pub fn to_json(&self) -> Value {
        json!({
            "s": self.distinct_values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "A": self.residue_sums.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "moments": self.moments.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

pub fn moment_table(profile: &FixedPointProfile, lambda: &Partition) -> Result<MomentTable> {
    if lambda.largest() > profile.half_dimension {
        return Err(Error::PartTooLarge {
            part: lambda.largest(),
            len: profile.half_dimension,
        });
    }
    let flavor = Flavor::of(profile.structure);
    let spec = SymmetricFunctionSpec::ElementaryProduct(lambda.clone());
    let squared = profile.structure == Structure::Smooth;

    let mut groups: BTreeMap<BigInt, BigRational> = BTreeMap::new();
    for point in &profile.points {
        let s = spec.at_point(point, squared)?;
        *groups.entry(s).or_insert_with(BigRational::zero) +=
            BigRational::new(BigInt::one(), point.euler());
    }
    let (distinct_values, residue_sums): (Vec<_>, Vec<_>) = groups.into_iter().unzip();

    let moments = (0..profile.point_count())
        .map(|i| {
            distinct_values
                .iter()
                .zip(&residue_sums)
                .map(|(s, a)| BigRational::from_integer(num_traits::pow(s.clone(), i)) * a)
                .sum()
        })
        .collect();

    Ok(MomentTable {
        lambda: lambda.clone(),
        flavor,
        distinct_values,
        residue_sums,
        moments,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentCheck {
    Pass,
    Fail { index: usize, value: BigRational },
}

impl MomentCheck {
    pub fn passed(&self) -> bool {
        matches!(self, MomentCheck::Pass)
    }
}

/// Checks that the tabulated moments of index `i < quotient` all vanish.
pub fn vanishing_moments_check(table: &MomentTable, quotient: usize) -> MomentCheck {
    table
        .moments
        .iter()
        .take(quotient)
        .enumerate()
        .find(|(_, m)| !m.is_zero())
        .map_or(MomentCheck::Pass, |(index, value)| MomentCheck::Fail {
            index,
            value: value.clone(),
        })
}

/// Solves `sum_t values[t]^i x_t = targets[i]` for `i < values.len()`.
///
/// Row `t` of the inverse of the Vandermonde matrix holds the coefficients of the
/// Lagrange basis polynomial `L_t(z) = prod_{u != t} (z - s_u) / (s_t - s_u)`.
///
/// # Panics
///
/// If `values` are not pairwise distinct or fewer targets than values are given.
pub fn solve_vandermonde(values: &[BigInt], targets: &[BigRational]) -> Vec<BigRational> {
    let l = values.len();
    assert!(targets.len() >= l, "need at least {l} moments, got {}", targets.len());

    // master polynomial prod_u (z - s_u), coefficients low to high
    let mut master = vec![BigInt::one()];
    for s in values {
        let mut next = vec![BigInt::zero(); master.len() + 1];
        for (i, c) in master.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * s;
        }
        master = next;
    }

    values
        .iter()
        .enumerate()
        .map(|(t, st)| {
            let denom: BigInt = values
                .iter()
                .enumerate()
                .filter(|&(u, _)| u != t)
                .map(|(_, su)| st - su)
                .product();
            assert!(!denom.is_zero(), "Vandermonde nodes must be distinct");
            // synthetic division of master by (z - s_t)
            let mut quotient = vec![BigInt::zero(); l];
            let mut carry = BigInt::zero();
            for i in (0..l).rev() {
                carry = &master[i + 1] + carry * st;
                quotient[i] = carry.clone();
            }
            let dot: BigRational = quotient
                .iter()
                .zip(targets)
                .map(|(q, m)| BigRational::from_integer(q.clone()) * m)
                .sum();
            dot / BigRational::from_integer(denom)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub partition: Partition,
    /// `n` in half dimension `m n` (or `2 m n` on the smooth side).
    pub quotient: usize,
    /// `(c_λ)^n[M]` or `(p_λ)^n[N]`.
    pub witness: BigRational,
    /// `Some(n + 1)` when the witness is nonzero.
    pub bound: Option<usize>,
    pub moment_table: MomentTable,
}

impl BoundCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "partition": self.partition.to_string(),
            "witness": self.witness.to_string(),
            "bound": self.bound,
            "moment_table": self.moment_table.to_json(),
        })
    }
}

pub fn certify_lower_bound(profile: &FixedPointProfile, lambda: &Partition) -> Result<BoundCertificate> {
    let flavor = Flavor::of(profile.structure);
    let step = lambda.weight() * flavor.degree_scale();
    if !profile.half_dimension.is_multiple_of(step) {
        return Err(Error::NonDivisibleDimension {
            half_dimension: profile.half_dimension,
            divisor: step,
        });
    }
    let quotient = profile.half_dimension / step;
    let power = lambda.repeated(quotient)?;
    let witness = match flavor {
        Flavor::Chern => chern_number(profile, &power)?.value,
        Flavor::Pontrjagin => pontrjagin_number(profile, &power)?.value,
    };
    let bound = (!witness.is_zero()).then_some(quotient + 1);
    Ok(BoundCertificate {
        partition: lambda.clone(),
        quotient,
        witness,
        bound,
        moment_table: moment_table(profile, lambda)?,
    })
}

/// Certificates for every partition whose weight is compatible with the dimension.
pub fn all_bound_certificates(profile: &FixedPointProfile) -> Result<Vec<BoundCertificate>> {
    let scale = Flavor::of(profile.structure).degree_scale();
    let mut out = Vec::new();
    for m in 1..=profile.half_dimension / scale {
        if !profile.half_dimension.is_multiple_of(m * scale) {
            continue;
        }
        for lambda in partitions_of(m) {
            out.push(certify_lower_bound(profile, &lambda)?);
        }
    }
    Ok(out)
}

/// The certificate with the largest bound, earliest on ties.
pub fn best_bound(certificates: &[BoundCertificate]) -> Option<&BoundCertificate> {
    certificates
        .iter()
        .filter(|c| c.bound.is_some())
        .fold(None, |best: Option<&BoundCertificate>, c| match best {
            Some(b) if b.bound >= c.bound => Some(b),
            _ => Some(c),
        })
}
