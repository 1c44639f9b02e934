//! Rigidity of the twisted equivariant index and the divisibility of `c_1`.
//!
//! If `c_1` is divisible by `d > 1` there is a line bundle `L` with
//! `L^d = K`, and the Lefschetz sum
//!
//! ```text
//! sum_i prod_j g^(k_j/d) / (1 - g^k_j)
//! ```
//!
//! is both constant in `g` (rigidity) and zero at `g -> infinity`, so it is
//! identically zero. Everything is computed after substituting `g = h^d`, which
//! turns the fractional powers into integer ones.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::model::{FixedPoint, FixedPointProfile, Structure};
use crate::poly::Poly;
use crate::ratfunc::RationalFunction;
use crate::semifree;

/// Largest polynomial degree the engine will build.
const MAX_DEGREE: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigiditySum {
    pub divisor: u64,
    pub value: RationalFunction,
}

impl RigiditySum {
    /// Power of `h` factored out of the canonical form.
    pub fn laurent_shift(&self) -> i64 {
        self.value.shift()
    }

    pub fn to_json(&self) -> Value {
        json!({ "d": self.divisor, "value": self.value.to_json(), "text": self.value.to_string() })
    }
}

fn weight_i64(k: &BigInt) -> Result<i64> {
    k.to_i64()
        .filter(|v| v.unsigned_abs() <= MAX_DEGREE)
        .ok_or_else(|| Error::ExponentOverflow(k.to_string()))
}

/// `1 - h^m` for `m > 0`.
fn one_minus_power(m: u64) -> Poly {
    let mut p = Poly::monomial(-BigInt::from(1), m as usize);
    p = &p + &Poly::one();
    p
}

/// `(-1)^negative * h^shift / prod_j (1 - h^m_j)` with every `m_j > 0`.
struct Summand {
    shift: i64,
    negative: bool,
    moduli: Vec<u64>,
}

/// `h^twist * prod_j 1 / (1 - h^(d k_j))`, with `1 / (1 - h^-m) = -h^m / (1 - h^m)`.
fn summand(point: &FixedPoint, d: u64, twist: i64) -> Result<Summand> {
    let mut shift = twist;
    let mut negative = false;
    let mut moduli = Vec::with_capacity(point.weights.len());
    for k in &point.weights {
        let k = weight_i64(k)?;
        let m = d
            .checked_mul(k.unsigned_abs())
            .filter(|&m| m <= MAX_DEGREE)
            .ok_or_else(|| Error::ExponentOverflow(format!("{d}*{k}")))?;
        if k < 0 {
            shift += m as i64;
            negative = !negative;
        }
        moduli.push(m);
    }
    Ok(Summand {
        shift,
        negative,
        moduli,
    })
}

impl Summand {
    fn to_function(&self) -> Result<RationalFunction> {
        let den = self
            .moduli
            .iter()
            .fold(Poly::one(), |acc, &m| &acc * &one_minus_power(m));
        let num = Poly::constant(BigInt::from(if self.negative { -1 } else { 1 }));
        RationalFunction::from_parts(self.shift, num, den)
    }

    /// Multiplicity of each cyclotomic factor in the denominator.
    fn cyclotomic_counts(&self) -> BTreeMap<u64, u32> {
        let mut counts = BTreeMap::new();
        for &m in &self.moduli {
            for e in divisors(m) {
                *counts.entry(e).or_insert(0) += 1;
            }
        }
        counts
    }
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            small.push(i);
            if i * i != m {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Adds the summands over their least common denominator. Since
/// `1 - h^m = -prod_{e | m} Phi_e(h)`, that denominator is a product of
/// cyclotomic powers, and reducing the total only takes trial division by
/// each of them -- no polynomial gcd, which is ruinous at these degrees.
fn sum_summands(summands: &[Summand]) -> Result<RationalFunction> {
    let Some(base) = summands.iter().map(|s| s.shift).min() else {
        return Ok(RationalFunction::zero());
    };
    let counts: Vec<_> = summands.iter().map(Summand::cyclotomic_counts).collect();
    let mut lcm: BTreeMap<u64, u32> = BTreeMap::new();
    for c in &counts {
        for (&e, &k) in c {
            let slot = lcm.entry(e).or_insert(0);
            *slot = (*slot).max(k);
        }
    }
    let cyclotomic: HashMap<u64, Poly> = lcm.keys().map(|&e| (e, Poly::cyclotomic(e as usize))).collect();

    let mut num = Poly::zero();
    for (s, c) in summands.iter().zip(&counts) {
        let mut t = Poly::one();
        for (e, &k) in &lcm {
            for _ in c.get(e).copied().unwrap_or(0)..k {
                t = &t * &cyclotomic[e];
            }
        }
        t = t.shl((s.shift - base) as usize);
        // each 1 - h^m carries a sign against its cyclotomic product
        if s.negative != (s.moduli.len() % 2 == 1) {
            t = -&t;
        }
        num = &num + &t;
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let mut den = Poly::one();
    for (e, mut k) in lcm {
        let phi = &cyclotomic[&e];
        while k > 0 {
            match num.div_exact(phi) {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        for _ in 0..k {
            den = &den * phi;
        }
    }
    RationalFunction::from_coprime_parts(base, num, den)
}

fn check_divisor(d: u64) -> Result<()> {
    if d == 0 {
        return Err(Error::BadParams("divisor d must be at least 1".into()));
    }
    Ok(())
}

/// Summands `h^(sum_j k_j) / prod_j (1 - h^(d k_j))`, one per fixed point.
pub fn rigidity_terms(profile: &FixedPointProfile, d: u64) -> Result<Vec<RationalFunction>> {
    twisted_summands(profile, d)?.iter().map(Summand::to_function).collect()
}

fn twisted_summands(profile: &FixedPointProfile, d: u64) -> Result<Vec<Summand>> {
    profile.require(Structure::AlmostComplex)?;
    check_divisor(d)?;
    profile
        .points
        .iter()
        .map(|p| {
            let twist = p.weights.iter().map(weight_i64).sum::<Result<i64>>()?;
            summand(p, d, twist)
        })
        .collect()
}

/// The twisted Lefschetz sum in `h = g^(1/d)`, in canonical form.
pub fn rigidity_sum(profile: &FixedPointProfile, d: u64) -> Result<RigiditySum> {
    let value = sum_summands(&twisted_summands(profile, d)?)?;
    Ok(RigiditySum { divisor: d, value })
}

pub fn is_identically_zero(sum: &RigiditySum) -> bool {
    sum.value.is_zero()
}

/// Untwisted sum `sum_i prod_j 1 / (1 - h^k_j)`, the equivariant Todd genus.
pub fn todd_sum(profile: &FixedPointProfile) -> Result<RationalFunction> {
    profile.require(Structure::AlmostComplex)?;
    let summands = profile
        .points
        .iter()
        .map(|p| summand(p, 1, 0))
        .collect::<Result<Vec<_>>>()?;
    sum_summands(&summands)
}

/// `rho_0 h^n (1 - h^(d-2))^n / (1 - h^d)^n`: the rigidity sum of a semi-free
/// action whose fixed points are distributed as `rho_t = rho_0 C(n, t)`.
pub fn semifree_closed_form(rho0: u64, n: u32, d: u64) -> Result<RationalFunction> {
    check_divisor(d)?;
    if rho0 == 0 {
        return Ok(RationalFunction::zero());
    }
    // 1 - h^(d-2); for d = 1 this is 1 - 1/h = (h - 1)/h
    let factor = match d {
        1 => RationalFunction::from_parts(-1, Poly::from_i64(&[-1, 1]), Poly::one())?,
        _ => RationalFunction::from_poly(&Poly::one() - &Poly::monomial(BigInt::from(1), (d - 2) as usize)),
    };
    let den = RationalFunction::from_poly(one_minus_power(d));
    let base = factor.checked_div(&den)?;
    let scaled = &RationalFunction::constant(BigInt::from(rho0)) * &RationalFunction::monomial(n as i64);
    Ok(&scaled * &base.pow(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityResult {
    /// Divisors whose rigidity sum is identically zero.
    pub admissible: Vec<u64>,
    /// Divisors ruled out, with the nonzero sum as certificate.
    pub rejected: Vec<RigiditySum>,
}

impl DivisibilityResult {
    pub fn to_json(&self) -> Value {
        json!({
            "admissible": self.admissible,
            "rejected": self.rejected.iter().map(RigiditySum::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Scans `d = 2..=d_max` for divisors of `c_1` compatible with a semi-free action.
pub fn divisibility_obstruction(profile: &FixedPointProfile, d_max: u64) -> Result<DivisibilityResult> {
    profile.require(Structure::AlmostComplex)?;
    if !semifree::is_semifree_candidate(profile) {
        // surface the offending weight
        semifree::rho_profile(profile)?;
    }
    if profile.is_empty() {
        return Err(Error::EmptyProfile);
    }
    let mut admissible = Vec::new();
    let mut rejected = Vec::new();
    for d in 2..=d_max {
        let sum = rigidity_sum(profile, d)?;
        if is_identically_zero(&sum) {
            admissible.push(d);
        } else {
            rejected.push(sum);
        }
    }
    Ok(DivisibilityResult {
        admissible,
        rejected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitViolation {
    pub point: usize,
    pub term: RationalFunction,
    /// Value of the summand as `h -> infinity`; `None` if it diverges.
    pub limit: Option<BigRational>,
}

/// Checks that every summand of the rigidity sum tends to zero as `h -> infinity`,
/// i.e. has negative degree at infinity.
pub fn limit_at_infinity_check(profile: &FixedPointProfile, d: u64) -> Result<Vec<LimitViolation>> {
    let terms = rigidity_terms(profile, d)?;
    Ok(terms
        .into_iter()
        .enumerate()
        .filter_map(|(point, term)| {
            let deg = term.degree_at_infinity()?;
            if deg < 0 {
                return None;
            }
            let limit = (deg == 0).then(|| {
                BigRational::new(
                    term.numerator().lead().cloned().unwrap_or_default(),
                    term.denominator().lead().cloned().unwrap_or_default(),
                )
            });
            Some(LimitViolation { point, term, limit })
        })
        .collect())
}
