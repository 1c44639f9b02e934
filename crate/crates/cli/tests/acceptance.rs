//! Acceptance suite. Every comparison is exact; each criterion prints one
//! PASS/FAIL line (run with `--nocapture` to see them).

use fixedpoint_cli::{cmd_semifree, cmd_verify, Verdict};
use fixedpoint_core::certifier::{
    certify_lower_bound, moment_table, solve_vandermonde, vanishing_moments_check,
};
use fixedpoint_core::localization::{
    all_chern_numbers, all_numbers, chern_number, residue_sum, vanishing_audit,
};
use fixedpoint_core::model::{as_smooth, catalog_cpn, catalog_product_cp1};
use fixedpoint_core::poly::Poly;
use fixedpoint_core::rigidity::{
    divisibility_obstruction, is_identically_zero, rigidity_sum, semifree_closed_form,
};
use fixedpoint_core::semifree::{
    binomial_audit, c1_cn1_audit, cobordism_coefficient, parity_count, pontrjagin_vanishing_audit,
    rho_profile, semifree_report, BinomialVerdict, PontrjaginVerdict,
};
use fixedpoint_core::symfunc::{elementary_all, partitions_of, SymmetricFunctionSpec};
use fixedpoint_core::{FixedPoint, FixedPointProfile, Partition, RationalFunction, Structure};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn verdict(id: u32, name: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {id:>2} [{name}]: PASS"),
        Err(msg) => {
            println!("criterion {id:>2} [{name}]: FAIL: {msg}");
            panic!("criterion {id} failed: {msg}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Pascal's triangle, independent of any library binomial.
fn binomial_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

fn random_exponents(rng: &mut StdRng, n: usize) -> Vec<i64> {
    let mut pool: Vec<i64> = (-15..=15).collect();
    pool.shuffle(rng);
    pool.truncate(n + 1);
    pool
}

/// CP^n with three random exponent tuples for each n, plus (CP^1)^n, n <= 6.
fn catalog_profiles(seed: u64) -> Vec<FixedPointProfile> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=6 {
        for _ in 0..3 {
            out.push(catalog_cpn(&random_exponents(&mut rng, n)).unwrap());
        }
        out.push(catalog_product_cp1(n).unwrap());
    }
    out
}

#[test]
fn criterion_01_cpn_ground_truth() {
    let binom = binomial_table(8);
    let mut rng = StdRng::seed_from_u64(1);
    let result = (|| {
        for n in 1..=6usize {
            for _ in 0..3 {
                let exps = random_exponents(&mut rng, n);
                let p = catalog_cpn(&exps).unwrap();
                for l in partitions_of(n) {
                    let expected: BigInt = l.parts().iter().map(|&t| binom[n + 1][t].clone()).product();
                    let got = chern_number(&p, &l).unwrap().value;
                    ensure(got == BigRational::from_integer(expected.clone()), || {
                        format!("CP^{n} exponents {exps:?} λ=({l}): {got} != {expected}")
                    })?;
                }
            }
        }
        let cp2 = catalog_cpn(&[0, 1, 2]).unwrap();
        ensure(chern_number(&cp2, &part("1,1")).unwrap().value == int(9), || "c1^2[CP^2] != 9".into())?;
        ensure(chern_number(&cp2, &part("2")).unwrap().value == int(3), || "c2[CP^2] != 3".into())
    })();
    verdict(1, "CP^n ground truth", result);
}

#[test]
fn criterion_02_degree_deficiency_vanishing() {
    let result = (|| {
        for p in catalog_profiles(2) {
            let v = vanishing_audit(&p).unwrap();
            ensure(v.is_empty(), || format!("{} nonvanishing sums, first {}", v.len(), v[0]))?;
            let s = as_smooth(&p).unwrap();
            let v = vanishing_audit(&s).unwrap();
            ensure(v.is_empty(), || format!("smooth: {} nonvanishing sums, first {}", v.len(), v[0]))?;
        }
        Ok(())
    })();
    verdict(2, "degree-deficiency vanishing", result);
}

#[test]
fn criterion_03_fixed_point_lower_bound() {
    let result = (|| {
        let cp2 = catalog_cpn(&[0, 1, 2]).unwrap();
        let c = certify_lower_bound(&cp2, &part("1")).unwrap();
        ensure(c.bound == Some(3) && cp2.point_count() == 3, || format!("CP^2 bound {:?}", c.bound))?;
        let q = catalog_product_cp1(2).unwrap();
        let c = certify_lower_bound(&q, &part("1")).unwrap();
        ensure(c.bound == Some(3) && q.point_count() == 4, || format!("(CP^1)^2 bound {:?}", c.bound))?;
        ensure(c.witness == int(8), || format!("(CP^1)^2 witness {}", c.witness))?;

        // synthetic profiles with r <= n: whenever the moments vanish the
        // Vandermonde solve and the direct grouping both give A_t = 0
        let mut rng = StdRng::seed_from_u64(3);
        let mut vanishing_cases = 0;
        let mut profiles = Vec::new();
        for _ in 0..300 {
            let n = rng.gen_range(2..=5);
            let r = rng.gen_range(1..=n);
            let pts = (0..r)
                .map(|_| {
                    FixedPoint::new((0..n).map(|_| {
                        let k: i64 = rng.gen_range(1..=4);
                        if rng.gen() { k } else { -k }
                    }))
                })
                .collect();
            profiles.push(FixedPointProfile::new(Structure::AlmostComplex, n, pts));
        }
        // antipodal pairs in odd dimension with c_1 = 0 at both points
        for w in [[1i64, 2, -3], [2, 2, -4], [1, -1, 0]] {
            if w.contains(&0) {
                continue;
            }
            let neg: Vec<i64> = w.iter().map(|k| -k).collect();
            profiles.push(FixedPointProfile::new(
                Structure::AlmostComplex,
                3,
                vec![FixedPoint::new(w), FixedPoint::new(neg)],
            ));
        }
        for p in &profiles {
            let n = p.half_dimension;
            for m in (1..=n).filter(|m| n % m == 0) {
                for l in partitions_of(m) {
                    let t = moment_table(p, &l).unwrap();
                    if vanishing_moments_check(&t, n / m).passed() && t.moments.len() <= n / m {
                        vanishing_cases += 1;
                        let k = t.distinct_values.len();
                        let solved = solve_vandermonde(&t.distinct_values, &t.moments[..k]);
                        ensure(solved.iter().all(Zero::is_zero), || format!("nonzero solve {solved:?}"))?;
                        ensure(t.residue_sums.iter().all(Zero::is_zero), || {
                            format!("moments vanish but A = {:?}", t.residue_sums)
                        })?;
                        let c = certify_lower_bound(p, &l).unwrap();
                        ensure(c.witness.is_zero(), || format!("witness {} with r <= n", c.witness))?;
                    }
                }
            }
        }
        ensure(vanishing_cases > 0, || "no synthetic profile exercised the vanishing branch".into())
    })();
    verdict(3, "fixed-point lower bound and Vandermonde lemma", result);
}

#[test]
fn criterion_04_moment_table_cross_check() {
    let result = (|| {
        for p in catalog_profiles(4) {
            for w in 1..=p.half_dimension {
                for l in partitions_of(w) {
                    let t = moment_table(&p, &l).unwrap();
                    ensure(t.moments.len() == p.point_count(), || "moment count != r".into())?;
                    for (i, m) in t.moments.iter().enumerate() {
                        let direct = residue_sum(&p, &SymmetricFunctionSpec::Power(l.clone(), i)).unwrap();
                        ensure(*m == direct, || format!("λ=({l}) i={i}: {m} != {direct}"))?;
                    }
                }
            }
        }
        Ok(())
    })();
    verdict(4, "moment table equals localization", result);
}

#[test]
fn criterion_05_semifree_suite() {
    let binom = binomial_table(16);
    let result = (|| {
        for n in 1..=8usize {
            let ac = catalog_product_cp1(n).unwrap();
            let rho = rho_profile(&ac).unwrap();
            for (t, &r) in rho.rho.iter().enumerate() {
                ensure(BigInt::from(r) == BigInt::from(rho.rho[0]) * &binom[n][t], || {
                    format!("n={n}: rho_{t} = {r}")
                })?;
            }
            ensure(binomial_audit(&rho) == BinomialVerdict::Pass, || format!("n={n}: binomial audit"))?;
            ensure(cobordism_coefficient(&ac).unwrap() == 0, || format!("n={n}: cobordism coefficient"))?;

            let smooth = as_smooth(&ac).unwrap();
            let diff = BigInt::from(parity_count(&smooth).unwrap().difference());
            match pontrjagin_vanishing_audit(&smooth).unwrap() {
                PontrjaginVerdict::DimensionalPass => ensure(n % 2 == 1, || format!("n={n} skipped"))?,
                PontrjaginVerdict::Checked { checks, .. } => {
                    ensure(checks.len() == partitions_of(n / 2).len(), || "missing partitions".into())?;
                    for c in &checks {
                        let formula: BigInt =
                            c.partition.parts().iter().map(|&t| binom[n][t].clone()).product::<BigInt>() * &diff;
                        ensure(c.localized.is_zero(), || format!("n={n}: p[{}] = {}", c.partition, c.localized))?;
                        ensure(c.localized == BigRational::from_integer(formula.clone()), || {
                            format!("n={n}: p[{}] != closed form {formula}", c.partition)
                        })?;
                    }
                }
            }

            let c = c1_cn1_audit(&ac).unwrap();
            let expected = BigInt::from(n) * (BigInt::one() << n);
            ensure(c.localized == BigRational::from_integer(expected.clone()), || {
                format!("n={n}: c1 c(n-1) = {} != {expected}", c.localized)
            })?;
        }
        Ok(())
    })();
    verdict(5, "semi-free suite on (CP^1)^n", result);
}

#[test]
fn criterion_06_binomial_identity() {
    let binom = binomial_table(16);
    let result = (|| {
        for n in 0..=16usize {
            let lhs: BigInt = (0..=n)
                .map(|t| {
                    let s = BigInt::from(n as i64 - 2 * t as i64);
                    &binom[n][t] * &s * &s
                })
                .sum();
            let rhs = BigInt::from(n) * (BigInt::one() << n);
            ensure(lhs == rhs, || format!("n={n}: {lhs} != {rhs}"))?;
        }
        Ok(())
    })();
    verdict(6, "binomial identity", result);
}

#[test]
fn criterion_07_rigidity_dichotomy() {
    let result = (|| {
        for n in 1..=6usize {
            let p = catalog_product_cp1(n).unwrap();
            ensure(is_identically_zero(&rigidity_sum(&p, 2).unwrap()), || format!("n={n}: d=2 nonzero"))?;
            for d in 3..=6 {
                let s = rigidity_sum(&p, d).unwrap();
                ensure(!s.value.is_zero(), || format!("n={n} d={d}: zero"))?;
                let closed = semifree_closed_form(1, n as u32, d).unwrap();
                ensure(s.value == closed, || format!("n={n} d={d}: {} != {closed}", s.value))?;
            }
            let r = divisibility_obstruction(&p, 6).unwrap();
            ensure(r.admissible == [2], || format!("n={n}: admissible {:?}", r.admissible))?;
        }
        Ok(())
    })();
    verdict(7, "rigidity dichotomy", result);
}

#[test]
fn criterion_08_divisor_one_todd_constant() {
    let mut rng = StdRng::seed_from_u64(8);
    let mut failures = Vec::new();
    for n in 1..=6usize {
        for _ in 0..3 {
            let exps = random_exponents(&mut rng, n);
            let s = rigidity_sum(&catalog_cpn(&exps).unwrap(), 1).unwrap();
            if s.value != RationalFunction::one() {
                failures.push(format!("CP^{n} {exps:?} -> {}", s.value));
            }
        }
    }
    let result = ensure(failures.is_empty(), || {
        format!("{} of 18 profiles: {}", failures.len(), failures.join("; "))
    });
    verdict(8, "d = 1 sum is the Todd constant 1", result);
}

#[test]
fn criterion_09_nonexistence_certificates() {
    let one = FixedPointProfile::new(Structure::AlmostComplex, 2, vec![FixedPoint::new([1, 1])]);
    let result = (|| {
        ensure(!vanishing_audit(&one).unwrap().is_empty(), || "vanishing audit passed".into())?;
        ensure(binomial_audit(&rho_profile(&one).unwrap()) != BinomialVerdict::Pass, || {
            "binomial audit passed".into()
        })?;
        ensure(cobordism_coefficient(&one).unwrap() != 0, || "cobordism coefficient zero".into())?;
        let mut violations = Vec::new();
        for report in [cmd_verify(&one).unwrap(), cmd_semifree(&one).unwrap()] {
            match report.verdict() {
                Verdict::Inconsistent(v) => violations.extend(v),
                Verdict::Consistent => return Err("report marked consistent".into()),
            }
        }
        ensure(violations.len() >= 3, || format!("only {violations:?}"))?;
        ensure(semifree_report(&one).unwrap().failures().len() >= 3, || "semi-free failures < 3".into())
    })();
    verdict(9, "non-existence certificates", result);
}

fn shuffled(p: &FixedPointProfile, rng: &mut StdRng) -> FixedPointProfile {
    let mut q = p.clone();
    for pt in &mut q.points {
        pt.weights.shuffle(rng);
    }
    q
}

fn random_poly(rng: &mut StdRng, len: usize) -> Poly {
    Poly::from_i64(&(0..len).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>())
}

fn random_rf(rng: &mut StdRng) -> RationalFunction {
    loop {
        let (nl, dl) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let num = random_poly(rng, nl);
        let den = random_poly(rng, dl);
        let shift = rng.gen_range(-3..=3);
        if let Ok(r) = RationalFunction::from_parts(shift, num, den) {
            return r;
        }
    }
}

#[test]
fn criterion_10_property_suite() {
    let result = (|| {
        let mut rng = StdRng::seed_from_u64(10);

        // shuffle invariance
        for p in catalog_profiles(10).into_iter().filter(|p| p.point_count() <= 16) {
            let q = shuffled(&p, &mut rng);
            ensure(all_chern_numbers(&p).unwrap() == all_chern_numbers(&q).unwrap(), || "chern numbers".into())?;
            let (ps, qs) = (as_smooth(&p).unwrap(), as_smooth(&q).unwrap());
            ensure(all_numbers(&ps).unwrap() == all_numbers(&qs).unwrap(), || "pontrjagin numbers".into())?;
            ensure(vanishing_audit(&p).unwrap() == vanishing_audit(&q).unwrap(), || "vanishing audit".into())?;
            ensure(moment_table(&p, &part("1")).unwrap() == moment_table(&q, &part("1")).unwrap(), || {
                "moment table".into()
            })?;
            for d in 1..=3 {
                ensure(rigidity_sum(&p, d).unwrap() == rigidity_sum(&q, d).unwrap(), || format!("rigidity d={d}"))?;
            }
            if let Ok(a) = semifree_report(&p) {
                ensure(a == semifree_report(&q).unwrap(), || "semi-free report".into())?;
            }
        }

        // exponent shift invariance
        for n in 1..=6 {
            let exps = random_exponents(&mut rng, n);
            let c: i64 = rng.gen_range(-100..=100);
            let moved: Vec<i64> = exps.iter().map(|e| e + c).collect();
            ensure(
                all_chern_numbers(&catalog_cpn(&exps).unwrap()).unwrap()
                    == all_chern_numbers(&catalog_cpn(&moved).unwrap()).unwrap(),
                || format!("shift {c} of {exps:?}"),
            )?;
        }

        // rational-function field axioms
        for i in 0..200 {
            let (a, b, c) = (random_rf(&mut rng), random_rf(&mut rng), random_rf(&mut rng));
            ensure(&(&a + &b) + &c == &a + &(&b + &c), || format!("#{i}: additive associativity"))?;
            ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("#{i}: multiplicative associativity"))?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("#{i}: distributivity"))?;
            ensure((&a - &a).is_zero(), || format!("#{i}: additive inverse"))?;
            if !a.is_zero() {
                ensure(&a * &a.inverse().unwrap() == RationalFunction::one(), || format!("#{i}: a * 1/a"))?;
            }
        }

        // Newton identities
        for i in 0..200 {
            let len = rng.gen_range(1..=8);
            let w: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-30i64..=30))).collect();
            let e = elementary_all(&w);
            let power = |k: usize| -> BigInt { w.iter().map(|x| num_traits::pow(x.clone(), k)).sum() };
            for k in 1..=len {
                let mut rhs = BigInt::zero();
                for j in 1..=k {
                    let t = &e[k - j] * power(j);
                    if j % 2 == 1 {
                        rhs += t;
                    } else {
                        rhs -= t;
                    }
                }
                ensure(BigInt::from(k) * &e[k] == rhs, || format!("#{i}: Newton identity k={k}"))?;
            }
        }
        Ok(())
    })();
    verdict(10, "property suite", result);
}
