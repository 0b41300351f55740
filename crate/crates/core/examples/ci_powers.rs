//! The linear formula for powers of a complete intersection, against search.

use monideal::formulas::{v_ci_power, CIIdealSpec};
use monideal::vnum::v_number;
use monideal::{MonomialIdeal, Ring};

fn main() -> monideal::Result<()> {
    let ring = Ring::new(&["x", "y", "z", "w", "t"])?;
    let i = MonomialIdeal::parse(&ring, "x^2*y, z^2*w, t^3")?;
    println!("I = {i}");
    for spec in CIIdealSpec::all(&i)? {
        print!("prime {}:", spec.prime());
        for n in 1..=3 {
            let f = v_ci_power(&spec, n)?;
            print!("  n={n} v={}", f.value.unwrap());
        }
        println!();
    }
    for n in 1..=3 {
        let pw = i.power(n)?;
        println!("search v(I^{n}) = {}", v_number(&pw)?.v);
    }
    Ok(())
}
