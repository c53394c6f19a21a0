//! Universal Manin-symbol presentations in both variants.

use modsym::make_coeff_ring;
use modsym::symbols::{build_presentation, compare_cusp_zero, Variant};

fn main() -> modsym::Result<()> {
    let ring = make_coeff_ring(5, 1, 4)?;
    for n in [5, 7, 11, 12] {
        for variant in [Variant::Full, Variant::CuspZero] {
            let space = build_presentation(n, variant, &ring)?;
            println!(
                "N={n:>2} {variant:>5}: {} generators, {} relations, quotient length {}",
                space.dim(),
                space.relations().len(),
                space.quotient().length()
            );
        }
    }

    let space = build_presentation(7, Variant::Full, &ring)?;
    let cd = space.cd_symbol(5, 11, 1, 2)?;
    println!("(5,11)-symbol at [1:2] has {} terms", cd.len());
    let moved = space.apply_diamond(2, &space.symbol(1, 3)?)?;
    println!("<2>[1:3] = [2:6]: {}", moved == space.symbol(2, 6)?);

    for n in [5, 7] {
        let cmp = compare_cusp_zero(n, &ring)?;
        println!("N={n}: presented length {}, image in full space {}", cmp.presented_length, cmp.image_length);
    }
    Ok(())
}
