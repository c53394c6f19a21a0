//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use modsym::properties::{property, run_properties, run_property};
use modsym::scenario::{acceptance_grid, run_grid, run_scenario, Case, GenerationReport, GridOutcome, ScenarioConfig};
use modsym::symbols::Variant;

const SCENARIO_LIMIT: Duration = Duration::from_secs(60);
const GRID_LIMIT: Duration = Duration::from_secs(15 * 60);
const SEED: u64 = 20;

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Verdict {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

/// Run each scenario at k = 1 and k = 2 and require the expected case with equality.
fn case_check(configs: &[ScenarioConfig], expected: Case) -> Verdict {
    let mut failures = Vec::new();
    for base in configs {
        for k in [1, 2] {
            let config = base.clone().precision(k);
            let start = Instant::now();
            match run_scenario(&config) {
                Ok(report) => {
                    let elapsed = start.elapsed();
                    if report.case != expected {
                        failures.push(format!("{}: case {} instead of {expected}", config.to_flags(), report.case));
                    } else if !report.equal {
                        failures.push(format!(
                            "{}: H={} C={} residual {:?}",
                            config.to_flags(),
                            report.dims.h_theta,
                            report.dims.c_theta,
                            report.divisors
                        ));
                    } else if elapsed > SCENARIO_LIMIT {
                        failures.push(format!("{}: took {elapsed:?}", config.to_flags()));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", config.to_flags())),
            }
        }
    }
    let runs = 2 * configs.len();
    if failures.is_empty() {
        Verdict::new(true, format!("{runs} runs equal"))
    } else {
        Verdict::new(false, failures.join("; "))
    }
}

fn criterion_1() -> Verdict {
    let configs = [
        ScenarioConfig::new(5, 1, 1, "1"),
        ScenarioConfig::new(7, 1, 1, "1"),
        ScenarioConfig::new(7, 1, 1, "omega4"),
        ScenarioConfig::new(7, 1, 5, "quad5"),
    ];
    case_check(&configs, Case::A)
}

fn criterion_2() -> Verdict {
    case_check(&[ScenarioConfig::new(7, 1, 5, "omega2*quad5")], Case::B)
}

fn criterion_3() -> Verdict {
    let verdict = case_check(&[ScenarioConfig::new(3, 1, 4, "[1,1]")], Case::C);
    if !verdict.pass {
        return verdict;
    }
    match run_scenario(&ScenarioConfig::new(3, 1, 4, "[1,1]")) {
        Ok(report) if report.extras.len() == 2 => verdict,
        Ok(report) => Verdict::new(false, format!("extras {:?}", report.extras)),
        Err(e) => Verdict::new(false, e.to_string()),
    }
}

fn criterion_4() -> Verdict {
    let ii = ScenarioConfig::new(7, 1, 5, "omega2*quad5").quotient("trivU:7").unwrap();
    let iii = ScenarioConfig::new(3, 1, 4, "[1,1]")
        .variant(Variant::CuspZero)
        .quotient("trivU:2")
        .unwrap();
    let a = case_check(&[ii], Case::Uii);
    let b = case_check(&[iii], Case::Uiii);
    Verdict::new(a.pass && b.pass, format!("ii: {}; iii: {}", a.detail, b.detail))
}

fn criterion_5() -> Verdict {
    let config = ScenarioConfig::new(5, 1, 1, "omega2")
        .variant(Variant::CuspZero)
        .quotient("t2eis")
        .unwrap();
    case_check(&[config], Case::T2)
}

fn reports(outcome: &GridOutcome) -> Vec<&GenerationReport> {
    outcome.reports.iter().filter_map(|r| r.report.as_ref()).collect()
}

fn criterion_6(outcome: &GridOutcome) -> Verdict {
    let mut checked = 0;
    let mut failures = Vec::new();
    for row in &outcome.reports {
        let Some(check) = row.report.as_ref().and_then(|r| r.projection) else {
            continue;
        };
        checked += 1;
        if !check.holds() {
            failures.push(format!(
                "{} (with [1:p]: {}, twist ramified: {}, bare: {})",
                row.scenario, check.with_projection, check.twist_ramified, check.bare_equal
            ));
        }
    }
    if checked == 0 {
        return Verdict::new(false, "no grid scenario qualifies");
    }
    if failures.is_empty() {
        Verdict::new(true, format!("{checked} scenarios"))
    } else {
        Verdict::new(false, format!("{} of {checked} fail: {}", failures.len(), failures.join("; ")))
    }
}

fn criterion_7() -> Verdict {
    let names = [
        "multconst",
        "eigrestrict",
        "antisymmetry",
        "relatesym",
        "gensumeq",
        "zero_terms",
        "u_operator",
    ];
    suites(&names, 100)
}

fn criterion_8() -> Verdict {
    suites(&["howell_oracle"], 200)
}

fn suites(names: &[&str], cases: usize) -> Verdict {
    let mut failures = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let Some(prop) = property(name) else {
            failures.push(format!("{name}: missing"));
            continue;
        };
        let report = run_property(&prop, SEED, i as u64, cases);
        if !report.passed || report.exercised < cases {
            let why = report
                .failure
                .map(|f| format!("{:?}: {}", f.minimized, f.message))
                .unwrap_or_else(|| format!("only {} cases exercised", report.exercised));
            failures.push(format!("{name}: {why}"));
        }
    }
    if failures.is_empty() {
        Verdict::new(true, format!("{} suites x {cases} cases", names.len()))
    } else {
        Verdict::new(false, failures.join("; "))
    }
}

fn criterion_9(outcome: &GridOutcome) -> Verdict {
    let mut verdicts: BTreeMap<String, Vec<(u32, bool)>> = BTreeMap::new();
    for report in reports(outcome) {
        let params = &report.params;
        let key = format!(
            "p={} M={} N={} {} {} {}",
            params.p, params.m, params.n, params.variant, params.theta, params.quotient
        );
        verdicts.entry(key).or_default().push((params.k, report.equal));
    }
    let mut paired = 0;
    let mut failures = Vec::new();
    for (key, list) in &verdicts {
        let one: Vec<bool> = list.iter().filter(|(k, _)| *k == 1).map(|&(_, e)| e).collect();
        let two: Vec<bool> = list.iter().filter(|(k, _)| *k == 2).map(|&(_, e)| e).collect();
        if one.is_empty() || two.is_empty() {
            failures.push(format!("{key}: missing a precision"));
            continue;
        }
        paired += 1;
        if one.iter().chain(&two).any(|&e| e != one[0]) {
            failures.push(format!("{key}: k=1 {one:?}, k=2 {two:?}"));
        }
    }
    if failures.is_empty() {
        Verdict::new(true, format!("{paired} scenario pairs"))
    } else {
        Verdict::new(false, failures.join("; "))
    }
}

fn criterion_10(outcome: &GridOutcome, elapsed: Duration) -> Verdict {
    if elapsed > GRID_LIMIT {
        return Verdict::new(false, format!("grid took {elapsed:?}"));
    }
    if outcome.summary.errors > 0 {
        return Verdict::new(false, format!("{} grid errors", outcome.summary.errors));
    }
    let again = run_grid(&acceptance_grid(), 4).canonical();
    if again.to_json() != outcome.canonical().to_json() {
        return Verdict::new(false, "grid reports differ between runs");
    }
    if run_properties(SEED, 20).to_json() != run_properties(SEED, 20).to_json() {
        return Verdict::new(false, "property reports differ between runs");
    }
    Verdict::new(
        true,
        format!("{} scenarios in {:.1}s on one worker, reports identical", outcome.summary.scenarios, elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let grid = run_grid(&acceptance_grid(), 1);
    let grid_time = start.elapsed();

    let verdicts = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(&grid),
        criterion_7(),
        criterion_8(),
        criterion_9(&grid),
        criterion_10(&grid, grid_time),
    ];
    let mut all = true;
    for (i, v) in verdicts.iter().enumerate() {
        all &= v.pass;
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {tag}  {}", i + 1, v.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
