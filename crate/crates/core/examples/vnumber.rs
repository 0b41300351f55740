//! v-numbers with local values and witness monomials.

use monideal::vnum::v_number;
use monideal::{MonomialIdeal, Ring};

fn main() -> monideal::Result<()> {
    let ring = Ring::new(&["x", "y", "z", "w"])?;
    for text in ["x*y, y*z, z*w", "x^2, x*y, y^3", "x^2*y, z^3*w"] {
        let i = MonomialIdeal::parse(&ring, text)?;
        let report = v_number(&i)?;
        println!("v({i}) = {}", report.v);
        for (p, (d, w)) in &report.locals {
            println!("  at {p}: {d}  witness {}", ring.format_monomial(w.monomial()));
        }
    }
    Ok(())
}
