//! Closures of three pure powers: the minimizing f_m and its degree.

use monideal::closure::closure_power;
use monideal::formulas::{f_m_witness, v_closure_3gen, IrreducibleSpec};
use monideal::vnum::v_number;

fn main() -> monideal::Result<()> {
    for (a1, a2, a3) in [(4, 7, 77), (5, 8, 100), (3, 5, 9)] {
        let r = v_closure_3gen(a1, a2, a3, 1)?;
        let degs: Vec<u64> =
            (1..a1).map(|m| f_m_witness(a1, a2, a3, m).map(|f| f.degree())).collect::<monideal::Result<_>>()?;
        let spec = IrreducibleSpec::new(&[a1, a2, a3])?;
        let searched = v_number(&closure_power(&spec.ideal(), 1)?)?.v;
        println!(
            "({a1},{a2},{a3}): deg f_m = {degs:?}, l = {:?}, formula {}, search {searched}, cases fired {:?}",
            r.l,
            r.result.value.unwrap(),
            r.fired
        );
    }
    Ok(())
}
