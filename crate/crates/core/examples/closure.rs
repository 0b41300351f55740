//! Integral closures from Newton polyhedra.

use monideal::closure::{closure_generators, closure_power, closure_power_ci, np_membership};
use monideal::{Monomial, MonomialIdeal, Ring};

fn main() -> monideal::Result<()> {
    let ring = Ring::new(&["x", "y"])?;
    let i = MonomialIdeal::parse(&ring, "x^3, y^5")?;
    println!("closure of {i} = {}", closure_generators(&i)?);
    for (a, b) in [(1, 4), (2, 2), (2, 1)] {
        let m = Monomial::new(vec![a, b]);
        println!("  {} in closure: {}", ring.format_monomial(&m), np_membership(&i, &m)?);
    }

    let ring = Ring::new(&["x", "y", "z", "w"])?;
    let ci = MonomialIdeal::parse(&ring, "x^2*y, z^2*w^3")?;
    for n in 1..=2 {
        let direct = closure_power(&ci, n)?;
        let by_components = closure_power_ci(&ci, n)?;
        println!("closure of power {n}: {} generators, paths agree: {}", direct.num_gens(), direct == by_components);
    }
    Ok(())
}
