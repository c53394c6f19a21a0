//! Arithmetic in GR(25, 2) and in Z/8.

use modsym::{integers_mod, make_coeff_ring};

fn main() -> modsym::Result<()> {
    // degree chosen so that 24th roots of unity exist
    let ring = make_coeff_ring(5, 2, 24)?;
    println!("{ring:?}: characteristic {}, residue field units {}", ring.characteristic(), ring.residue_units_order());

    let zeta = ring.root_of_unity(24)?;
    println!("zeta_24 = {}, zeta^12 = {}", ring.format(zeta), ring.format(ring.pow(zeta, 12)));

    for a in 1..5 {
        let t = ring.teichmuller(a)?;
        println!("teichmuller({a}) = {}, its 4th power = {}", ring.format(t), ring.format(ring.pow(t, 4)));
    }

    let x = ring.from_coeffs(&[3, 7]);
    let inv = ring.inv(x).expect("x is a unit");
    println!("({})^-1 = {}", ring.format(x), ring.format(inv));
    let y = ring.int(10);
    println!("valuation of 10 is {}, unit: {}", ring.valuation(y), ring.is_unit(y));

    let z8 = integers_mod(2, 3)?;
    println!("{z8:?}: 3 * 3 = {}", z8.format(z8.mul(z8.int(3), z8.int(3))));
    Ok(())
}
