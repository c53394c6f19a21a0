//! The θ-part at N = 35, p = 7 and what the (c,d)-symbols generate there.

use std::sync::Arc;

use modsym::arith::euler_phi;
use modsym::character::{parse_character, CharacterGroup};
use modsym::eigen::{bezout_units, CdRange, EigenContext};
use modsym::make_coeff_ring;
use modsym::symbols::{build_presentation, Variant};

fn main() -> modsym::Result<()> {
    let n = 35;
    let ring = make_coeff_ring(7, 1, euler_phi(n))?;
    let space = Arc::new(build_presentation(n, Variant::Full, &ring)?);
    let group = CharacterGroup::new(n, &ring)?;

    for spec in ["quad5", "omega2*quad5"] {
        let theta = parse_character(spec, &group)?;
        let ctx = EigenContext::new(space.clone(), theta)?;
        let h = ctx.h_length();
        let c = ctx.image_length(&ctx.cd_span(CdRange::Exhaustive));
        let eis = ctx.image_length(&ctx.eigensymbol_span()?);
        println!("{spec:>13}: {} orbit coordinates, H {h}, (c,d)-span {c}, eigensymbols {eis}", ctx.rank());

        let omega2 = group.teichmuller()?.pow(2);
        let beta = ctx.eigensymbol(&omega2, 1, 7)?;
        println!("{spec:>13}: alpha^(1,7) for omega^2 is zero in H: {}", ctx.is_zero_in_h(&beta));
    }

    let (a, b, delta) = bezout_units(n, 5, 7)?;
    println!("{a}*5 + {b}*7 = {delta} mod {n}");
    Ok(())
}
