//! Irreducible decomposition, associated primes and symbolic powers.

use monideal::decompose::{associated_primes, irreducible_decomposition, symbolic_power, SymbolicMode};
use monideal::{MonomialIdeal, Ring};

fn main() -> monideal::Result<()> {
    let ring = Ring::new(&["x", "y", "z"])?;
    let i = MonomialIdeal::parse(&ring, "x^2*y, x*z^2, y^3")?;
    println!("I = {i}");
    for c in irreducible_decomposition(&i)?.components() {
        println!("  component {c}  radical {}", c.radical());
    }
    let primes: Vec<String> = associated_primes(&i)?.iter().map(ToString::to_string).collect();
    println!("Ass(I) = {}", primes.join(" | "));

    let ci = MonomialIdeal::parse(&ring, "x^2*y, z^3")?;
    for n in 1..=3 {
        let same = symbolic_power(&ci, n, SymbolicMode::MinimalPrimes)? == ci.power(n)?;
        println!("{ci}: symbolic power {n} equals the ordinary one: {same}");
    }
    Ok(())
}
