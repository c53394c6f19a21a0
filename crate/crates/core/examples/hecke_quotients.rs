//! Trivial-U and T2 quotients of the θ-part.

use std::sync::Arc;

use modsym::arith::euler_phi;
use modsym::character::{parse_character, CharacterGroup};
use modsym::eigen::EigenContext;
use modsym::hecke::{apply_quotient, QuotientSpec};
use modsym::make_coeff_ring;
use modsym::scenario::{run_scenario, ScenarioConfig};
use modsym::symbols::{build_presentation, Variant};

fn main() -> modsym::Result<()> {
    let ring = make_coeff_ring(7, 1, euler_phi(35))?;
    let space = Arc::new(build_presentation(35, Variant::Full, &ring)?);
    let group = CharacterGroup::new(35, &ring)?;
    let ctx = EigenContext::new(space, parse_character("omega2*quad5", &group)?)?;
    for spec in ["none", "trivU:7", "trivU:5", "trivU:5,7"] {
        let spec: QuotientSpec = spec.parse()?;
        let quotient = apply_quotient(&ctx, &spec, false)?;
        println!("N=35 omega2*quad5 {spec:<10} length {}", quotient.h_length());
    }

    let scenarios = [
        ScenarioConfig::new(7, 1, 5, "omega2*quad5").quotient("trivU:7")?,
        ScenarioConfig::new(3, 1, 4, "[1,1]").variant(Variant::CuspZero).quotient("trivU:2")?,
        ScenarioConfig::new(5, 1, 1, "omega2").variant(Variant::CuspZero).quotient("t2eis")?,
    ];
    for config in &scenarios {
        let r = run_scenario(config)?;
        println!("{:<70} case {:<6} equal {}", config.to_flags(), r.case.to_string(), r.equal);
    }
    Ok(())
}
