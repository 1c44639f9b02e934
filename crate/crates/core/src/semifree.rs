//! Obstructions for semi-free actions, where every weight at every fixed point is ±1.
//!
//! Each audit computes both sides of an identity along independent routes: a
//! residue sum through [`crate::localization`] and a closed combinatorial form
//! from the sign counts. A failed audit certifies that no semi-free action has
//! the given fixed-point data.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::localization::{chern_number, pontrjagin_number, residue_sum};
use crate::model::{as_smooth, FixedPointProfile, Partition, Structure};
use crate::symfunc::{partitions_of, SymmetricFunctionSpec};

pub fn is_semifree_candidate(profile: &FixedPointProfile) -> bool {
    profile
        .points
        .iter()
        .all(|p| p.weights.iter().all(|k| k.abs().is_one()))
}

fn require_semifree(profile: &FixedPointProfile) -> Result<()> {
    for (i, p) in profile.points.iter().enumerate() {
        if let Some(k) = p.weights.iter().find(|k| !k.abs().is_one()) {
            return Err(Error::NotSemifree {
                point: i,
                weight: k.to_string(),
            });
        }
    }
    Ok(())
}

/// `rho[t]` counts the fixed points with exactly `t` negative weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoProfile {
    pub n: usize,
    pub rho: Vec<u64>,
}

pub fn rho_profile(profile: &FixedPointProfile) -> Result<RhoProfile> {
    require_semifree(profile)?;
    let n = profile.half_dimension;
    let mut rho = vec![0u64; n + 1];
    for p in &profile.points {
        rho[p.negative_count()] += 1;
    }
    Ok(RhoProfile { n, rho })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinomialVerdict {
    Pass,
    Fail { t: usize, found: u64, expected: BigInt },
}

/// Checks `rho_t = rho_0 * C(n, t)` for every `t`.
pub fn binomial_audit(rho: &RhoProfile) -> BinomialVerdict {
    let rho0 = BigInt::from(rho.rho.first().copied().unwrap_or(0));
    for (t, &found) in rho.rho.iter().enumerate() {
        let expected = &rho0 * binomial(BigInt::from(rho.n), BigInt::from(t));
        if BigInt::from(found) != expected {
            return BinomialVerdict::Fail { t, found, expected };
        }
    }
    BinomialVerdict::Pass
}

/// Fixed points split by the parity of the number of `-1` weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCount {
    pub even_count: u64,
    pub odd_count: u64,
}

impl ParityCount {
    pub fn difference(&self) -> i64 {
        self.even_count as i64 - self.odd_count as i64
    }
}

pub fn parity_count(profile: &FixedPointProfile) -> Result<ParityCount> {
    require_semifree(profile)?;
    let odd = profile
        .points
        .iter()
        .filter(|p| p.negative_count() % 2 == 1)
        .count() as u64;
    Ok(ParityCount {
        even_count: profile.point_count() as u64 - odd,
        odd_count: odd,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PontrjaginCheck {
    pub partition: Partition,
    /// Value from the residue sum.
    pub localized: BigRational,
    /// `prod_t C(2q, λ_t) * (even - odd)`.
    pub closed_form: BigInt,
}

impl PontrjaginCheck {
    pub fn holds(&self) -> bool {
        self.localized.is_zero() && self.localized == BigRational::from_integer(self.closed_form.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PontrjaginVerdict {
    /// Odd half dimension: there are no top Pontrjagin numbers.
    DimensionalPass,
    Checked {
        parity_sum: BigRational,
        checks: Vec<PontrjaginCheck>,
    },
}

impl PontrjaginVerdict {
    pub fn passed(&self) -> bool {
        match self {
            PontrjaginVerdict::DimensionalPass => true,
            PontrjaginVerdict::Checked { parity_sum, checks } => {
                parity_sum.is_zero() && checks.iter().all(PontrjaginCheck::holds)
            }
        }
    }
}

/// Every top Pontrjagin number must vanish for a semi-free action, and each one
/// equals `prod_t C(2q, λ_t)` times the signed parity count.
pub fn pontrjagin_vanishing_audit(profile: &FixedPointProfile) -> Result<PontrjaginVerdict> {
    require_semifree(profile)?;
    let smooth = match profile.structure {
        Structure::AlmostComplex => as_smooth(profile)?,
        Structure::Smooth => profile.clone(),
    };
    let n = smooth.half_dimension;
    if n % 2 == 1 {
        return Ok(PontrjaginVerdict::DimensionalPass);
    }
    let q = n / 2;
    let diff = BigInt::from(parity_count(&smooth)?.difference());
    let parity_sum = residue_sum(&smooth, &SymmetricFunctionSpec::One)?;
    let checks = partitions_of(q)
        .into_iter()
        .map(|lambda| {
            let localized = pontrjagin_number(&smooth, &lambda)?.value;
            let closed_form = lambda
                .parts()
                .iter()
                .map(|&p| binomial(BigInt::from(n), BigInt::from(p)))
                .product::<BigInt>()
                * &diff;
            Ok(PontrjaginCheck {
                partition: lambda,
                localized,
                closed_form,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PontrjaginVerdict::Checked { parity_sum, checks })
}

/// Signed count `sum_i sign(prod_j k_j)`: the coefficient of `[CP^n]` in the
/// localized cobordism class, taking each fixed point's projective space with
/// the orientation given by the sign of its weight product.
pub fn cobordism_coefficient(profile: &FixedPointProfile) -> Result<i64> {
    require_semifree(profile)?;
    Ok(profile
        .points
        .iter()
        .map(|p| if p.euler().is_negative() { -1 } else { 1 })
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Check {
    pub localized: BigRational,
    /// `rho_0 * n * 2^n`
    pub closed_form: BigInt,
}

impl C1Check {
    pub fn holds(&self) -> bool {
        self.localized == BigRational::from_integer(self.closed_form.clone())
    }
}

/// `c_1 c_{n-1}[M] = rho_0 n 2^n` (for `n = 1` the left side is `c_1[M]`).
pub fn c1_cn1_audit(profile: &FixedPointProfile) -> Result<C1Check> {
    profile.require(Structure::AlmostComplex)?;
    let rho = rho_profile(profile)?;
    let n = profile.half_dimension;
    let lambda = if n == 1 {
        Partition::new(vec![1])?
    } else {
        Partition::new(vec![1, n - 1])?
    };
    let localized = chern_number(profile, &lambda)?.value;
    let closed_form = BigInt::from(rho.rho[0]) * BigInt::from(n) * (BigInt::one() << n);
    Ok(C1Check {
        localized,
        closed_form,
    })
}

/// All semi-free audits for one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemifreeReport {
    pub rho: RhoProfile,
    pub binomial: BinomialVerdict,
    pub parity: ParityCount,
    pub pontrjagin: PontrjaginVerdict,
    pub cobordism_coefficient: i64,
    /// Present for almost-complex profiles.
    pub c1_cn1: Option<C1Check>,
}

impl SemifreeReport {
    /// Names of the failed audits, in report order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.binomial != BinomialVerdict::Pass {
            out.push("binomial");
        }
        if !self.pontrjagin.passed() {
            out.push("pontrjagin-vanishing");
        }
        if self.cobordism_coefficient != 0 {
            out.push("cobordism");
        }
        if self.c1_cn1.as_ref().is_some_and(|c| !c.holds()) {
            out.push("c1-cn1");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let pontrjagin = match &self.pontrjagin {
            PontrjaginVerdict::DimensionalPass => json!({ "pass": true, "dimensional": true }),
            PontrjaginVerdict::Checked { parity_sum, checks } => json!({
                "pass": self.pontrjagin.passed(),
                "parity_sum": parity_sum.to_string(),
                "entries": checks.iter().map(|c| json!({
                    "partition": c.partition.to_string(),
                    "value": c.localized.to_string(),
                    "closed_form": c.closed_form.to_string(),
                })).collect::<Vec<_>>(),
            }),
        };
        let binomial = match &self.binomial {
            BinomialVerdict::Pass => json!({ "pass": true }),
            BinomialVerdict::Fail { t, found, expected } => json!({
                "pass": false, "t": t, "found": found, "expected": expected.to_string(),
            }),
        };
        json!({
            "rho": self.rho.rho,
            "parity": [self.parity.even_count, self.parity.odd_count],
            "cobordism_coefficient": self.cobordism_coefficient,
            "orientation_convention": "sign of the weight product at each fixed point",
            "binomial": binomial,
            "pontrjagin": pontrjagin,
            "c1_cn1": self.c1_cn1.as_ref().map(|c| json!({
                "pass": c.holds(),
                "value": c.localized.to_string(),
                "closed_form": c.closed_form.to_string(),
            })),
        })
    }
}

pub fn semifree_report(profile: &FixedPointProfile) -> Result<SemifreeReport> {
    let c1_cn1 = match profile.structure {
        Structure::AlmostComplex => Some(c1_cn1_audit(profile)?),
        Structure::Smooth => None,
    };
    Ok(SemifreeReport {
        rho: rho_profile(profile)?,
        binomial: binomial_audit(&rho_profile(profile)?),
        parity: parity_count(profile)?,
        pontrjagin: pontrjagin_vanishing_audit(profile)?,
        cobordism_coefficient: cobordism_coefficient(profile)?,
        c1_cn1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localization::int;
    use crate::model::{catalog_cpn, catalog_product_cp1, FixedPoint};

    fn one_point() -> FixedPointProfile {
        FixedPointProfile::new(Structure::AlmostComplex, 2, vec![FixedPoint::new([1, 1])])
    }

    #[test]
    fn candidates() {
        assert!(is_semifree_candidate(&catalog_product_cp1(3).unwrap()));
        assert!(!is_semifree_candidate(&catalog_cpn(&[0, 1, 2]).unwrap()));
        assert!(is_semifree_candidate(&FixedPointProfile::empty(Structure::Smooth, 4)));
    }

    #[test]
    fn rho_profiles() {
        assert_eq!(rho_profile(&catalog_product_cp1(2).unwrap()).unwrap().rho, [1, 2, 1]);
        assert_eq!(rho_profile(&catalog_product_cp1(3).unwrap()).unwrap().rho, [1, 3, 3, 1]);
        assert_eq!(rho_profile(&one_point()).unwrap().rho, [1, 0, 0]);
        assert!(matches!(
            rho_profile(&catalog_cpn(&[0, 1, 2]).unwrap()),
            Err(Error::NotSemifree { point: 0, .. })
        ));
    }

    #[test]
    fn binomial_audits() {
        let pass = |n, rho: &[u64]| binomial_audit(&RhoProfile { n, rho: rho.to_vec() });
        assert_eq!(pass(2, &[1, 2, 1]), BinomialVerdict::Pass);
        assert_eq!(pass(3, &[1, 3, 3, 1]), BinomialVerdict::Pass);
        assert_eq!(
            pass(1, &[1, 2]),
            BinomialVerdict::Fail { t: 1, found: 2, expected: BigInt::from(1) }
        );
        assert_eq!(
            binomial_audit(&rho_profile(&one_point()).unwrap()),
            BinomialVerdict::Fail { t: 1, found: 0, expected: BigInt::from(2) }
        );
    }

    #[test]
    fn parity_counts() {
        let pc = |p: &FixedPointProfile| {
            let c = parity_count(p).unwrap();
            (c.even_count, c.odd_count)
        };
        assert_eq!(pc(&catalog_product_cp1(2).unwrap()), (2, 2));
        assert_eq!(pc(&catalog_product_cp1(1).unwrap()), (1, 1));
        assert_eq!(pc(&one_point()), (1, 0));
    }

    #[test]
    fn pontrjagin_vanishing() {
        let v = pontrjagin_vanishing_audit(&catalog_product_cp1(2).unwrap()).unwrap();
        let PontrjaginVerdict::Checked { checks, .. } = &v else { panic!("n = 2 is even") };
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].closed_form, BigInt::zero());
        assert_eq!(checks[0].localized, int(0));
        assert!(v.passed());

        let v = pontrjagin_vanishing_audit(&catalog_product_cp1(4).unwrap()).unwrap();
        let PontrjaginVerdict::Checked { checks, .. } = &v else { panic!("n = 4 is even") };
        let names: Vec<String> = checks.iter().map(|c| c.partition.to_string()).collect();
        assert_eq!(names, ["2", "1,1"]);
        assert!(v.passed());

        assert_eq!(
            pontrjagin_vanishing_audit(&catalog_product_cp1(3).unwrap()).unwrap(),
            PontrjaginVerdict::DimensionalPass
        );
    }

    #[test]
    fn pontrjagin_closed_form_tracks_localization_off_the_zero_locus() {
        // (+,+) and (-,-) only: parity difference 2, p_1 = C(2,1)... with n = 2, q = 1
        let p = FixedPointProfile::new(
            Structure::Smooth,
            2,
            vec![FixedPoint::new([1, 1]), FixedPoint::new([-1, -1])],
        );
        let v = pontrjagin_vanishing_audit(&p).unwrap();
        let PontrjaginVerdict::Checked { parity_sum, checks } = &v else { unreachable!() };
        assert_eq!(*parity_sum, int(2));
        assert_eq!(checks[0].localized, int(4));
        assert_eq!(checks[0].closed_form, BigInt::from(4));
        assert!(!v.passed());
    }

    #[test]
    fn cobordism() {
        assert_eq!(cobordism_coefficient(&catalog_product_cp1(2).unwrap()).unwrap(), 0);
        assert_eq!(cobordism_coefficient(&catalog_product_cp1(5).unwrap()).unwrap(), 0);
        assert_eq!(cobordism_coefficient(&one_point()).unwrap(), 1);
    }

    #[test]
    fn c1_cn1() {
        for (n, v) in [(1, 2), (2, 8), (3, 24)] {
            let c = c1_cn1_audit(&catalog_product_cp1(n).unwrap()).unwrap();
            assert_eq!(c.localized, int(v));
            assert_eq!(c.closed_form, BigInt::from(v));
            assert!(c.holds());
        }
        assert!(matches!(
            c1_cn1_audit(&as_smooth(&catalog_product_cp1(2).unwrap()).unwrap()),
            Err(Error::WrongStructure { .. })
        ));
    }

    #[test]
    fn one_point_report_fails() {
        let r = semifree_report(&one_point()).unwrap();
        assert_eq!(r.failures(), ["binomial", "pontrjagin-vanishing", "cobordism", "c1-cn1"]);
    }
}
