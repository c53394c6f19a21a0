//! Generation checks for a few scenarios, with the JSON report of one.

use modsym::scenario::{run_scenario, ScenarioConfig};
use modsym::symbols::Variant;

fn main() -> modsym::Result<()> {
    let scenarios = [
        ScenarioConfig::new(5, 1, 1, "1"),
        ScenarioConfig::new(7, 2, 5, "quad5"),
        ScenarioConfig::new(7, 1, 5, "omega2*quad5"),
        ScenarioConfig::new(3, 1, 4, "[1,1]").variant(Variant::CuspZero),
        ScenarioConfig::new(5, 1, 1, "omega2"),
    ];
    for config in &scenarios {
        let r = run_scenario(config)?;
        println!(
            "{:<60} case {:<9} H {:>2} C {:>2} extras {:?} residual {:?}",
            config.to_flags(),
            r.case.to_string(),
            r.dims.h_theta,
            r.dims.c_theta,
            r.extras,
            r.divisors
        );
    }

    let config: ScenarioConfig = "--p 7 --M 1 --theta omega4 --k 2".parse()?;
    println!("{}", run_scenario(&config)?.canonical().to_json());
    Ok(())
}
