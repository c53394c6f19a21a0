//! Howell form, membership witnesses and elementary divisors over Z/8.

use modsym::integers_mod;
use modsym::linalg::{elementary_divisors, howell_form, Row, Submodule};

fn main() -> modsym::Result<()> {
    let ring = integers_mod(2, 3)?;
    let row = |xs: &[i64]| -> Row { xs.iter().map(|&x| ring.int(x)).collect() };

    // twice the first row is [0,2,0], which Hermite form alone would miss
    let a = howell_form(&[row(&[4, 1, 0]), row(&[0, 2, 6])], 3, &ring);
    println!("{a:?}");
    println!("length {}", a.length());

    let v = row(&[0, 4, 4]);
    match a.membership(&v)? {
        Some(coeffs) => println!("[0,4,4] = {:?} . rows", coeffs),
        None => println!("[0,4,4] is not in the span"),
    }
    println!("[1,0,0] in span: {}", a.contains(&row(&[1, 0, 0])));

    let full = Submodule::full(&ring, 3);
    let divisors: Vec<String> = elementary_divisors(&a, &full)?.iter().map(|d| d.to_string()).collect();
    println!("Z/8^3 / span: {divisors:?}");
    Ok(())
}
