//! Dirichlet characters mod 35 with values in a 7-adic ring.

use modsym::arith::euler_phi;
use modsym::character::{parse_character, CharacterGroup};
use modsym::make_coeff_ring;

fn main() -> modsym::Result<()> {
    let ring = make_coeff_ring(7, 1, euler_phi(35))?;
    let group = CharacterGroup::new(35, &ring)?;
    println!("generators of (Z/35)^x: {:?}", group.unit_group().generators());

    let all = group.enumerate();
    let even = all.iter().filter(|c| c.is_even()).count();
    println!("{} characters, {even} even", all.len());

    for spec in ["1", "omega2", "quad5", "omega2*quad5", "[2,4]"] {
        let chi = parse_character(spec, &group)?;
        println!(
            "{spec:>14}: exponents {:?}, conductor {}, even {}, value at 2 = {}",
            chi.exponents(),
            chi.conductor(),
            chi.is_even(),
            ring.format(chi.value(2))
        );
    }

    let chi = parse_character("quad5", &group)?;
    println!(
        "quad5 at 7: {} mod 35, {} for the primitive character",
        ring.format(chi.value(7)),
        ring.format(chi.primitive_value(7))
    );
    Ok(())
}
