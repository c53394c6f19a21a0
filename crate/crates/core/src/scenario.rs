//! Scenario configuration, case classification, generation reports and grids.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{euler_phi, factorize, is_prime};
use crate::character::{parse_character, restrict_to_part, CharacterGroup, DirichletCharacter};
use crate::eigen::{CdRange, EigenContext};
use crate::error::{Error, Result};
use crate::hecke::{apply_quotient, QuotientSpec};
use crate::linalg::{elementary_divisors, howell_form, Divisor, Row, Submodule};
use crate::ring::make_coeff_ring;
use crate::symbols::{build_presentation, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Level {
    #[value(name = "M")]
    M,
    #[value(name = "Mp")]
    Mp,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::M => "M",
            Level::Mp => "Mp",
        })
    }
}

/// One generation check: `(p, k, M, level, variant, θ, quotient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub p: u64,
    pub k: u32,
    pub m: u64,
    pub level: Level,
    pub variant: Variant,
    pub theta: String,
    pub quotient: QuotientSpec,
    pub cd: CdRange,
    /// Allow the `T_2` condition on the full variant.
    pub allow_full_t2: bool,
}

impl ScenarioConfig {
    pub fn new(p: u64, k: u32, m: u64, theta: &str) -> ScenarioConfig {
        ScenarioConfig {
            p,
            k,
            m,
            level: Level::Mp,
            variant: Variant::Full,
            theta: theta.to_string(),
            quotient: QuotientSpec::none(),
            cd: CdRange::Exhaustive,
            allow_full_t2: false,
        }
    }

    pub fn variant(mut self, variant: Variant) -> ScenarioConfig {
        self.variant = variant;
        self
    }

    pub fn level(mut self, level: Level) -> ScenarioConfig {
        self.level = level;
        self
    }

    pub fn quotient(mut self, spec: &str) -> Result<ScenarioConfig> {
        self.quotient = spec.parse()?;
        Ok(self)
    }

    pub fn precision(mut self, k: u32) -> ScenarioConfig {
        self.k = k;
        self
    }

    pub fn n(&self) -> u64 {
        match self.level {
            Level::M => self.m,
            Level::Mp => self.m * self.p,
        }
    }

    /// Checks the standing hypotheses, naming the first one that fails.
    pub fn validate(&self) -> Result<()> {
        if self.p % 2 == 0 || !is_prime(self.p) {
            return Err(Error::InvalidPrime(self.p));
        }
        if self.k == 0 {
            return Err(Error::InvalidPrecision);
        }
        if self.m == 0 {
            return Err(Error::Config("M must be positive".into()));
        }
        if self.m % self.p == 0 {
            return Err(Error::PDividesM(self.m));
        }
        let phi_m = euler_phi(self.m);
        if phi_m % self.p == 0 {
            return Err(Error::PDividesPhiM(phi_m));
        }
        if self.n() < 4 {
            return Err(Error::LevelTooSmall(self.n()));
        }
        self.quotient.validate(self.n())
    }

    /// Flags in the grid-file syntax.
    pub fn to_flags(&self) -> String {
        let mut s = format!(
            "--p {} --k {} --M {} --level {} --variant {} --theta {}",
            self.p, self.k, self.m, self.level, self.variant, self.theta
        );
        if !self.quotient.is_empty() {
            s.push_str(&format!(" --quotient {}", self.quotient));
        }
        if let CdRange::Bound(b) = self.cd {
            s.push_str(&format!(" --cd-bound {b}"));
        }
        if self.allow_full_t2 {
            s.push_str(" --allow-full-t2");
        }
        s
    }
}

/// Scenario flags shared by `verify` and grid files.
#[derive(Args, Clone, Debug)]
pub struct ScenarioArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long = "M", default_value_t = 1)]
    pub m: u64,
    #[arg(long, value_enum, default_value_t = Level::Mp)]
    pub level: Level,
    #[arg(long, default_value = "full")]
    pub variant: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub theta: String,
    /// `trivU:L1,L2`, `t2eis`, `t2eis:global`, joined by `+`.
    #[arg(long)]
    pub quotient: Option<String>,
    /// Enumerate every (c,d) residue class (the default).
    #[arg(long, conflicts_with = "cd_bound")]
    pub cd_exhaustive: bool,
    /// Only use c, d up to this bound; the report is marked non-exhaustive.
    #[arg(long)]
    pub cd_bound: Option<u64>,
    /// Permit the T2 condition on the full variant.
    #[arg(long)]
    pub allow_full_t2: bool,
}

impl TryFrom<&ScenarioArgs> for ScenarioConfig {
    type Error = Error;

    fn try_from(args: &ScenarioArgs) -> Result<ScenarioConfig> {
        Ok(ScenarioConfig {
            p: args.p,
            k: args.k,
            m: args.m,
            level: args.level,
            variant: Variant::from_str(&args.variant)?,
            theta: args.theta.clone(),
            quotient: match &args.quotient {
                Some(q) => q.parse()?,
                None => QuotientSpec::none(),
            },
            cd: match args.cd_bound {
                Some(b) => CdRange::Bound(b),
                None => CdRange::Exhaustive,
            },
            allow_full_t2: args.allow_full_t2,
        })
    }
}

#[derive(Parser)]
#[command(no_binary_name = true)]
struct GridLine {
    #[command(flatten)]
    args: ScenarioArgs,
}

impl FromStr for ScenarioConfig {
    type Err = Error;

    /// Parse one line of flags, e.g. `--p 5 --M 1 --theta 1`.
    fn from_str(line: &str) -> Result<ScenarioConfig> {
        let parsed = GridLine::try_parse_from(line.split_whitespace())
            .map_err(|e| Error::Config(e.to_string().lines().next().unwrap_or("").to_string()))?;
        ScenarioConfig::try_from(&parsed.args)
    }
}

/// Which statement covers a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Case {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "U-i")]
    Ui,
    #[serde(rename = "U-ii")]
    Uii,
    #[serde(rename = "U-iii")]
    Uiii,
    #[serde(rename = "T2")]
    T2,
    #[serde(rename = "uncovered")]
    Uncovered,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::A => "a",
            Case::B => "b",
            Case::C => "c",
            Case::Ui => "U-i",
            Case::Uii => "U-ii",
            Case::Uiii => "U-iii",
            Case::T2 => "T2",
            Case::Uncovered => "uncovered",
        })
    }
}

/// An eigensymbol `α_{χ,ψ}^{g,h}` adjoined to the (c,d)-span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extra {
    pub label: String,
    pub chi: DirichletCharacter,
    pub g: u64,
    pub h: u64,
}

/// Derived character data of a scenario at level `N = Mp`.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub omega: DirichletCharacter,
    /// `θ ω^{-2}`
    pub twist: DirichletCharacter,
    /// Conductor of `θ ω^{-2}`.
    pub f: u64,
}

impl CharacterData {
    pub fn new(theta: &DirichletCharacter) -> Result<CharacterData> {
        let omega = theta.group().teichmuller()?;
        let twist = theta.mul(&omega.pow(-2));
        let f = twist.conductor();
        Ok(CharacterData { omega, twist, f })
    }
}

/// Case label and prescribed extra generators.
pub fn classify(config: &ScenarioConfig, theta: &DirichletCharacter) -> Result<(Case, Vec<Extra>)> {
    if config.level == Level::M {
        return Ok((Case::Uncovered, Vec::new()));
    }
    let (p, m, n) = (config.p, config.m, config.n());
    let data = CharacterData::new(theta)?;
    let omega2 = data.omega.pow(2);
    let f = data.f;
    if f % m != 0 {
        return Ok((Case::Uncovered, Vec::new()));
    }
    let spec = &config.quotient;
    if !spec.is_empty() {
        if spec.t2.is_some() && m == 1 && theta == &omega2 && config.variant == Variant::CuspZero {
            return Ok((Case::T2, Vec::new()));
        }
        if p >= 5 && f == n {
            return Ok((Case::Ui, Vec::new()));
        }
        if p >= 5 && f == m && m > 1 && spec.trivial_u.contains(&p) {
            let restricted = restrict_to_part(theta, m)?;
            if restricted.value_exponent(p as i64) != Some(0) {
                return Ok((Case::Uii, Vec::new()));
            }
        }
        let has_ell = factorize(m).iter().any(|&(l, _)| spec.trivial_u.contains(&l));
        if has_ell && (p >= 5 || (f == n && config.variant == Variant::CuspZero)) {
            return Ok((Case::Uiii, Vec::new()));
        }
    }
    if p >= 5 && f == n {
        return Ok((Case::A, Vec::new()));
    }
    if p >= 5 && f == m && m > 1 {
        let extra = Extra {
            label: format!("alpha_{{omega^2,theta*omega^-2}}^{{1,{p}}}"),
            chi: omega2,
            g: 1,
            h: p,
        };
        return Ok((Case::B, vec![extra]));
    }
    if p == 3 && theta.conductor() == n {
        let trivial = theta.group().trivial();
        let extras = vec![
            Extra {
                label: "alpha_{1,theta}".into(),
                chi: trivial.clone(),
                g: 1,
                h: 1,
            },
            Extra {
                label: format!("alpha_{{1,theta}}^{{{n},1}}"),
                chi: trivial,
                g: n,
                h: 1,
            },
        ];
        return Ok((Case::C, extras));
    }
    Ok((Case::Uncovered, Vec::new()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u64,
    pub k: u32,
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub variant: Variant,
    pub theta: String,
    pub quotient: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    #[serde(rename = "H_theta")]
    pub h_theta: u32,
    #[serde(rename = "C_theta")]
    pub c_theta: u32,
}

/// Whether `H^θ` is spanned by `C^θ` and the projection of `[1:p]`, and
/// whether `C^θ` alone suffices when `θω^{-2}` is nontrivial on `(Z/pZ)^x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionCheck {
    pub with_projection: bool,
    /// `θω^{-2}` is nontrivial on `(Z/pZ)^x`, so `C^θ` alone must suffice.
    pub twist_ramified: bool,
    pub bare_equal: bool,
}

impl ProjectionCheck {
    pub fn holds(&self) -> bool {
        self.with_projection && (!self.twist_ramified || self.bare_equal)
    }
}

/// Verdict of one scenario. Lengths are composition lengths over the
/// coefficient ring (dimensions over the residue field when `k = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub params: Params,
    pub case: Case,
    pub dims: Dims,
    pub extras: Vec<String>,
    /// Invariants of `H^θ / (C^θ + extras)`.
    pub divisors: Vec<String>,
    pub equal: bool,
    pub millis: u64,
    /// The (c,d) enumeration covered every residue class.
    pub exhaustive: bool,
    /// Invariants of `H^θ / C^θ`, before adjoining extras.
    pub bare_divisors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<ProjectionCheck>,
}

impl GenerationReport {
    /// A scenario with a case label must report equality.
    pub fn claim_holds(&self) -> bool {
        (self.case == Case::Uncovered || self.equal) && self.projection.map_or(true, |p| p.holds())
    }

    /// Copy with the timing zeroed, for byte-level comparisons.
    pub fn canonical(&self) -> GenerationReport {
        GenerationReport {
            millis: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn divisor_strings(divs: &[Divisor]) -> Vec<String> {
    divs.iter().map(|d| d.to_string()).collect()
}

/// Everything computed for one scenario, for callers that need more than the report.
pub struct ScenarioRun {
    pub report: GenerationReport,
    pub context: EigenContext,
    pub cd_span: Submodule,
    pub extras: Vec<Row>,
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<GenerationReport> {
    Ok(run_scenario_detailed(config)?.report)
}

pub fn run_scenario_detailed(config: &ScenarioConfig) -> Result<ScenarioRun> {
    let start = Instant::now();
    config.validate()?;
    let n = config.n();
    let ring = make_coeff_ring(config.p, config.k, euler_phi(n))?;
    let group = CharacterGroup::new(n, &ring)?;
    let theta = parse_character(&config.theta, &group)?;
    if !theta.is_even() {
        return Err(Error::OddCharacter);
    }
    let space = Arc::new(build_presentation(n, config.variant, &ring)?);
    let base = EigenContext::new(space, theta.clone())?;
    let ctx = apply_quotient(&base, &config.quotient, config.allow_full_t2)?;
    let (case, extras) = classify(config, &theta)?;

    let cd_span = ctx.cd_span(config.cd);
    let extra_rows: Vec<Row> = extras
        .iter()
        .map(|e| ctx.eigensymbol(&e.chi, e.g, e.h))
        .collect::<Result<_>>()?;
    let full = Submodule::full(&ring, ctx.rank());
    let with_relations = cd_span.sum(ctx.relations());
    let bare = elementary_divisors(&with_relations, &full)?;
    let augmented = with_relations.with_rows(&extra_rows);
    let divisors = elementary_divisors(&augmented, &full)?;

    let projection = projection_check(config, &theta, &ctx, &with_relations)?;

    let report = GenerationReport {
        params: Params {
            p: config.p,
            k: config.k,
            m: config.m,
            n,
            variant: config.variant,
            theta: theta.label(),
            quotient: config.quotient.to_string(),
        },
        case,
        dims: Dims {
            h_theta: ctx.h_length(),
            c_theta: ctx.image_length(&cd_span),
        },
        extras: extras.iter().map(|e| e.label.clone()).collect(),
        equal: divisors.is_empty(),
        divisors: divisor_strings(&divisors),
        millis: start.elapsed().as_millis() as u64,
        exhaustive: config.cd.is_exhaustive(),
        bare_divisors: divisor_strings(&bare),
        projection,
    };
    Ok(ScenarioRun {
        report,
        context: ctx,
        cd_span,
        extras: extra_rows,
    })
}

/// The `[1:p]` statement applies for `p >= 5`, `N = Mp`, no quotient,
/// `θ != ω²` and `M | f`.
fn projection_check(
    config: &ScenarioConfig,
    theta: &DirichletCharacter,
    ctx: &EigenContext,
    c_plus_relations: &Submodule,
) -> Result<Option<ProjectionCheck>> {
    if config.level != Level::Mp || config.p < 5 || !config.quotient.is_empty() {
        return Ok(None);
    }
    let data = CharacterData::new(theta)?;
    if theta == &data.omega.pow(2) || data.f % config.m != 0 {
        return Ok(None);
    }
    let ring = ctx.ring();
    let full_len = ctx.rank() as u32 * ring.k();
    // `[1:p]` has a zero coordinate when `M = 1`; it is zero in the cuspidal-at-zero variant
    let one_p = match ctx.space().index_of(1, config.p as i64) {
        Some(_) => ctx.project_symbol(1, config.p as i64)?,
        None => vec![ring.zero(); ctx.rank()],
    };
    let with_projection = c_plus_relations.with_rows(&[one_p]).length() == full_len;
    let twist_ramified = data.f % config.p == 0;
    let bare_equal = c_plus_relations.length() == full_len;
    Ok(Some(ProjectionCheck {
        with_projection,
        twist_ramified,
        bare_equal,
    }))
}

/// One grid row: the scenario text and its report or error.
#[derive(Clone, Debug, Serialize)]
pub struct GridRow {
    pub scenario: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<GenerationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseSummary {
    pub equal: usize,
    pub unequal: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GridSummary {
    pub scenarios: usize,
    pub errors: usize,
    pub by_case: BTreeMap<String, CaseSummary>,
    /// Scenarios with a case label whose claim failed.
    pub failed_claims: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GridOutcome {
    pub reports: Vec<GridRow>,
    pub summary: GridSummary,
}

impl GridOutcome {
    pub fn canonical(&self) -> GridOutcome {
        let mut out = self.clone();
        for row in &mut out.reports {
            if let Some(r) = &mut row.report {
                r.millis = 0;
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid outcomes serialize")
    }
}

/// Parse a grid file: one scenario of flags per line, `#` comments.
pub fn parse_grid(text: &str) -> Result<Vec<ScenarioConfig>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| {
            line.parse()
                .map_err(|e: Error| Error::Config(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

/// The scenario grid used by the acceptance suite.
pub fn acceptance_grid() -> Vec<ScenarioConfig> {
    parse_grid(include_str!("../grids/acceptance.grid")).expect("bundled grid parses")
}

/// Run scenarios on `workers` threads; rows keep the input order.
pub fn run_grid(configs: &[ScenarioConfig], workers: usize) -> GridOutcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let rows: Vec<GridRow> = pool.install(|| {
        configs
            .par_iter()
            .map(|config| {
                let scenario = config.to_flags();
                match run_scenario(config) {
                    Ok(report) => GridRow {
                        scenario,
                        report: Some(report),
                        error: None,
                    },
                    Err(e) => GridRow {
                        scenario,
                        report: None,
                        error: Some(e.to_string()),
                    },
                }
            })
            .collect()
    });
    let mut summary = GridSummary {
        scenarios: rows.len(),
        ..GridSummary::default()
    };
    for row in &rows {
        match &row.report {
            None => summary.errors += 1,
            Some(report) => {
                let entry = summary.by_case.entry(report.case.to_string()).or_default();
                if report.equal {
                    entry.equal += 1;
                } else {
                    entry.unequal += 1;
                }
                if !report.claim_holds() {
                    summary.failed_claims.push(row.scenario.clone());
                }
            }
        }
    }
    GridOutcome {
        reports: rows,
        summary,
    }
}

/// Worker count from `MODSYM_WORKERS`, else the number of CPUs.
pub fn default_workers() -> usize {
    std::env::var("MODSYM_WORKERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// CSV with one row per report.
pub fn write_csv<W: std::io::Write>(writer: W, reports: &[&GenerationReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| Error::Config(format!("csv: {e}"));
    w.write_record([
        "p", "k", "M", "N", "variant", "theta", "quotient", "case", "H_theta", "C_theta", "extras",
        "divisors", "equal", "millis", "exhaustive",
    ])
    .map_err(io)?;
    for r in reports {
        w.write_record([
            r.params.p.to_string(),
            r.params.k.to_string(),
            r.params.m.to_string(),
            r.params.n.to_string(),
            r.params.variant.to_string(),
            r.params.theta.clone(),
            r.params.quotient.clone(),
            r.case.to_string(),
            r.dims.h_theta.to_string(),
            r.dims.c_theta.to_string(),
            r.extras.join(";"),
            r.divisors.join(";"),
            r.equal.to_string(),
            r.millis.to_string(),
            r.exhaustive.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("csv: {e}")))?;
    Ok(())
}

/// Howell span of explicit rows, re-exported for examples.
pub fn span(rows: &[Row], dim: usize, ring: &crate::ring::CoeffRing) -> Submodule {
    howell_form(rows, dim, ring)
}
