//! Command-line front end: reads fixed-point profiles, runs the localization
//! audits and prints exact reports.
//!
//! Exit codes: 0 consistent, 2 input or usage error, 3 the data is
//! mathematically inconsistent (no action realizes it).

mod report;

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use fixedpoint_core::certifier::{all_bound_certificates, best_bound};
use fixedpoint_core::localization::{
    all_chern_numbers, all_pontrjagin_numbers, chern_number, integrality_audit, pontrjagin_number,
    vanishing_audit, CharacteristicNumber, Violation,
};
use fixedpoint_core::model::{as_smooth, catalog_cpn, catalog_product_cp1};
use fixedpoint_core::rigidity::{divisibility_obstruction, limit_at_infinity_check};
use fixedpoint_core::semifree::{
    binomial_audit, c1_cn1_audit, cobordism_coefficient, is_semifree_candidate, parity_count,
    pontrjagin_vanishing_audit, rho_profile, semifree_report, BinomialVerdict, PontrjaginVerdict,
};
use fixedpoint_core::{Error, FixedPointProfile, Partition, Structure};
use serde_json::{json, Value};

pub use report::{Report, Section, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fixedpoint", version, about = "Characteristic numbers of circle actions from fixed-point weights")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Profile JSON file, or "-" for standard input
    pub profile: String,
    /// Print the machine-readable JSON report
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chern numbers by localization
    Chern {
        #[command(flatten)]
        input: ProfileArgs,
        /// A single partition, e.g. "2,1"
        #[arg(long)]
        partition: Option<Partition>,
    },
    /// Pontrjagin numbers by localization
    Pontrjagin {
        #[command(flatten)]
        input: ProfileArgs,
        #[arg(long)]
        partition: Option<Partition>,
    },
    /// Vanishing and integrality audits
    Verify {
        #[command(flatten)]
        input: ProfileArgs,
    },
    /// Semi-free obstructions
    Semifree {
        #[command(flatten)]
        input: ProfileArgs,
    },
    /// Divisibility of c_1 via the rigidity identity
    Rigidity {
        #[command(flatten)]
        input: ProfileArgs,
        #[arg(long, default_value_t = 6)]
        dmax: u64,
    },
    /// Lower bounds on the number of fixed points
    Bound {
        #[command(flatten)]
        input: ProfileArgs,
    },
    /// Emit a profile for a known action
    Catalog {
        #[command(subcommand)]
        kind: CatalogKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogKind {
    /// Linear action on CP^n with the given exponents
    Cpn {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        exponents: Vec<i64>,
    },
    /// Diagonal action on (CP^1)^n
    #[command(name = "prod-cp1")]
    ProdCp1 {
        #[arg(long)]
        n: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text, code)
            };
        }
    };
    execute(cli.command, stdin)
}

type ReportBuilder = dyn Fn(&FixedPointProfile) -> Result<Report, Error>;

fn execute(command: Command, stdin: &mut dyn Read) -> Outcome {
    let (input, build): (ProfileArgs, Box<ReportBuilder>) =
        match command {
            Command::Catalog { kind } => return cmd_catalog(kind),
            Command::Chern { input, partition } => {
                (input, Box::new(move |p| cmd_chern(p, partition.as_ref())))
            }
            Command::Pontrjagin { input, partition } => {
                (input, Box::new(move |p| cmd_pontrjagin(p, partition.as_ref())))
            }
            Command::Verify { input } => (input, Box::new(cmd_verify)),
            Command::Semifree { input } => (input, Box::new(cmd_semifree)),
            Command::Rigidity { input, dmax } => (input, Box::new(move |p| cmd_rigidity(p, dmax))),
            Command::Bound { input } => (input, Box::new(cmd_bound)),
        };
    let profile = match load_profile(&input.profile, stdin) {
        Ok(p) => p,
        Err(e) => return Outcome::error(e),
    };
    match build(&profile) {
        Ok(report) => {
            let code = match report.verdict() {
                Verdict::Consistent => EXIT_OK,
                Verdict::Inconsistent(_) => EXIT_INCONSISTENT,
            };
            let text = if input.json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            Outcome::ok(text, code)
        }
        Err(e) => Outcome::error(e),
    }
}

pub fn load_profile(path: &str, stdin: &mut dyn Read) -> Result<FixedPointProfile, Error> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    FixedPointProfile::from_json(&text)
}

fn number_lines(numbers: &[CharacteristicNumber]) -> Vec<String> {
    numbers
        .iter()
        .map(|c| {
            let mark = if c.integral { "" } else { "  (not an integer)" };
            format!("{} → {}{mark}", c.partition, c.value)
        })
        .collect()
}

fn numbers_section(name: &str, flavor: &str, numbers: &[CharacteristicNumber]) -> Section {
    Section::new(
        name,
        numbers.iter().all(|c| c.integral),
        number_lines(numbers),
        json!({
            "flavor": flavor,
            "entries": numbers.iter().map(CharacteristicNumber::to_json).collect::<Vec<_>>(),
            "violations": numbers.iter().filter(|c| !c.integral).map(|c| c.partition.to_string()).collect::<Vec<_>>(),
        }),
    )
}

pub fn cmd_chern(profile: &FixedPointProfile, partition: Option<&Partition>) -> Result<Report, Error> {
    let numbers = match partition {
        Some(l) => vec![chern_number(profile, l)?],
        None => all_chern_numbers(profile)?,
    };
    let mut r = Report::new(profile);
    r.push(numbers_section("chern numbers", "chern", &numbers));
    Ok(r)
}

pub fn cmd_pontrjagin(
    profile: &FixedPointProfile,
    partition: Option<&Partition>,
) -> Result<Report, Error> {
    // an almost-complex profile is read through its underlying smooth structure
    let smooth = match profile.structure {
        Structure::Smooth => profile.clone(),
        Structure::AlmostComplex => as_smooth(profile)?,
    };
    let numbers = match partition {
        Some(l) => vec![pontrjagin_number(&smooth, l)?],
        None => all_pontrjagin_numbers(&smooth)?,
    };
    let mut r = Report::new(&smooth);
    let mut section = numbers_section("pontrjagin numbers", "pontrjagin", &numbers);
    if numbers.is_empty() {
        section.lines.push("odd half dimension: no top Pontrjagin numbers".into());
    }
    r.push(section);
    Ok(r)
}

fn violations_section(name: &str, violations: &[Violation]) -> Section {
    let lines = if violations.is_empty() {
        vec!["none".to_string()]
    } else {
        violations.iter().map(ToString::to_string).collect()
    };
    Section::new(
        name,
        violations.is_empty(),
        lines,
        Value::Array(violations.iter().map(Violation::to_json).collect()),
    )
}

pub fn cmd_verify(profile: &FixedPointProfile) -> Result<Report, Error> {
    let mut r = Report::new(profile);
    r.push(violations_section("vanishing", &vanishing_audit(profile)?));
    r.push(violations_section("integrality", &integrality_audit(profile)?));
    Ok(r)
}

pub fn cmd_semifree(profile: &FixedPointProfile) -> Result<Report, Error> {
    let mut r = Report::new(profile);
    if !is_semifree_candidate(profile) {
        let reason = rho_profile(profile).unwrap_err();
        r.push(Section::new(
            "semi-free",
            true,
            vec![format!("not semi-free: {reason}"), "semi-free audits do not apply".into()],
            json!({ "semifree": false, "reason": reason.to_string() }),
        ));
        return Ok(r);
    }
    let full = semifree_report(profile)?;
    r.push(Section::new(
        "semi-free",
        true,
        vec!["all weights are ±1".into()],
        full.to_json(),
    ));

    let rho = rho_profile(profile)?;
    let (pass, line) = match binomial_audit(&rho) {
        BinomialVerdict::Pass => (true, format!("rho = {:?} = rho_0 C(n, t)", rho.rho)),
        BinomialVerdict::Fail { t, found, expected } => (
            false,
            format!("rho = {:?}: rho_{t} = {found}, expected {expected}", rho.rho),
        ),
    };
    r.push(Section::new("binomial", pass, vec![line], json!({ "rho": rho.rho })));

    let parity = parity_count(profile)?;
    r.push(Section::new(
        "parity",
        true,
        vec![format!("even = {}, odd = {}", parity.even_count, parity.odd_count)],
        json!([parity.even_count, parity.odd_count]),
    ));

    let pv = pontrjagin_vanishing_audit(profile)?;
    let lines = match &pv {
        PontrjaginVerdict::DimensionalPass => vec!["odd half dimension: holds for dimensional reasons".into()],
        PontrjaginVerdict::Checked { parity_sum, checks } => {
            let mut l = vec![format!("sum of 1/prod k = {parity_sum}")];
            l.extend(checks.iter().map(|c| {
                format!("p[{}] = {} (closed form {})", c.partition, c.localized, c.closed_form)
            }));
            l
        }
    };
    r.push(Section::new("pontrjagin-vanishing", pv.passed(), lines, full.to_json()["pontrjagin"].clone()));

    let cob = cobordism_coefficient(profile)?;
    r.push(Section::new(
        "cobordism",
        cob == 0,
        vec![
            format!("coefficient of [CP^n] = {cob}"),
            "orientation of each CP^n taken from the sign of the weight product".into(),
        ],
        json!({ "cobordism_coefficient": cob }),
    ));

    if profile.structure == Structure::AlmostComplex {
        let c = c1_cn1_audit(profile)?;
        r.push(Section::new(
            "c1-cn1",
            c.holds(),
            vec![format!("c_1 c_(n-1) = {}, rho_0 n 2^n = {}", c.localized, c.closed_form)],
            full.to_json()["c1_cn1"].clone(),
        ));
    }
    Ok(r)
}

pub fn cmd_rigidity(profile: &FixedPointProfile, d_max: u64) -> Result<Report, Error> {
    if d_max < 2 {
        return Err(Error::BadParams(format!("--dmax must be at least 2, got {d_max}")));
    }
    let result = divisibility_obstruction(profile, d_max)?;
    let mut r = Report::new(profile);
    let mut lines = vec![format!("admissible d in 2..={d_max}: {:?}", result.admissible)];
    lines.extend(
        result
            .rejected
            .iter()
            .map(|s| format!("d = {} rejected: sum = {}", s.divisor, s.value)),
    );
    r.push(Section::new("divisibility", true, lines, result.to_json()));

    let mut limit_lines = Vec::new();
    let mut limit_data = Vec::new();
    for d in 2..=d_max {
        for v in limit_at_infinity_check(profile, d)? {
            limit_lines.push(format!("d = {d}, point {}: summand {} does not vanish at infinity", v.point, v.term));
            limit_data.push(json!({ "d": d, "point": v.point, "term": v.term.to_json() }));
        }
    }
    let pass = limit_data.is_empty();
    if pass {
        limit_lines.push("every summand vanishes at infinity".into());
    }
    r.push(Section::new("limit-at-infinity", pass, limit_lines, Value::Array(limit_data)));
    Ok(r)
}

pub fn cmd_bound(profile: &FixedPointProfile) -> Result<Report, Error> {
    let certs = all_bound_certificates(profile)?;
    let mut r = Report::new(profile);
    let r_count = profile.point_count();
    let lines = match best_bound(&certs) {
        Some(c) => vec![format!(
            "r ≥ {} via λ=({}), witness {}",
            c.bound.unwrap(),
            c.partition,
            c.witness
        )],
        None => vec!["no bound".into()],
    };
    r.push(Section::new(
        "bound",
        true,
        lines,
        json!({
            "best": best_bound(&certs).map(|c| c.to_json()),
            "certificates": certs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        }),
    ));
    let broken: Vec<String> = certs
        .iter()
        .filter(|c| c.bound.is_some_and(|b| b > r_count))
        .map(|c| format!("λ=({}) needs r ≥ {}, profile has {r_count}", c.partition, c.bound.unwrap()))
        .collect();
    if !broken.is_empty() {
        r.push(Section::new("point-count", false, broken.clone(), json!(broken)));
    }
    Ok(r)
}

pub fn cmd_catalog(kind: CatalogKind) -> Outcome {
    let profile = match kind {
        CatalogKind::Cpn { exponents } => catalog_cpn(&exponents),
        CatalogKind::ProdCp1 { n } => catalog_product_cp1(n),
    };
    match profile {
        Ok(p) => Outcome::ok(format!("{}\n", p.to_json()), EXIT_OK),
        Err(e) => Outcome::error(Error::BadParams(e.to_string())),
    }
}
