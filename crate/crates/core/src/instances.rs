//! Seeded random ideals and the fixed families used by the verify suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::ring::{Exp, Monomial, MonomialIdeal, Ring};

/// The two named three-generator instances and the `f_m` index minimizing
/// `deg f_m` for each.
pub const THREE_GEN_NAMED: [((Exp, Exp, Exp), Exp); 2] = [((4, 7, 77), 3), ((5, 8, 100), 2)];

/// A complete intersection on `x1..xm` with `2 ≤ m ≤ max_vars`: between one
/// and `max_gens` generators on pairwise disjoint, nonempty supports, with
/// exponents in `1..=max_exp`.
pub fn random_ci_ideal<R: Rng>(rng: &mut R, max_gens: usize, max_vars: usize, max_exp: Exp) -> MonomialIdeal {
    assert!(max_gens >= 1 && max_vars >= 2 && max_exp >= 1);
    let m = rng.gen_range(2..=max_vars);
    let r = rng.gen_range(1..=max_gens.min(m));
    let mut vars: Vec<usize> = (0..m).collect();
    vars.shuffle(rng);
    // first r shuffled variables seed the generators, the rest join one or none
    let mut owner: Vec<Option<usize>> = vec![None; m];
    for (g, &v) in vars.iter().take(r).enumerate() {
        owner[v] = Some(g);
    }
    for &v in &vars[r..] {
        let pick = rng.gen_range(0..=r);
        owner[v] = (pick < r).then_some(pick);
    }
    let mut gens = vec![vec![0; m]; r];
    for (v, o) in owner.iter().enumerate() {
        if let Some(g) = o {
            gens[*g][v] = rng.gen_range(1..=max_exp);
        }
    }
    let ring = Ring::indexed("x", m);
    MonomialIdeal::new(&ring, gens.into_iter().map(Monomial::new).collect()).expect("arity matches ring")
}

/// A proper nonzero ideal on `x1..x{num_vars}` with at most `max_gens`
/// random generators of exponents `≤ max_exp`.
pub fn random_ideal<R: Rng>(rng: &mut R, num_vars: usize, max_gens: usize, max_exp: Exp) -> MonomialIdeal {
    assert!(num_vars >= 1 && max_gens >= 1 && max_exp >= 1);
    let ring = Ring::indexed("x", num_vars);
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<Exp> = (0..num_vars).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(&ring, gens).expect("arity matches ring")
}

/// `⟨x^{q+1}, y^{q+1}⟩`, whose powers lose exactly `q` under closure.
pub fn equigenerated_gap_family(q: Exp) -> Result<MonomialIdeal> {
    let ring = Ring::new(&["x", "y"])?;
    MonomialIdeal::new(&ring, vec![Monomial::new(vec![q + 1, 0]), Monomial::new(vec![0, q + 1])])
}

/// `⟨(x1⋯xq)², (y1⋯yq)³⟩` for `q ≥ 1`; `⟨x, y²⟩` stands in for `q = 0`.
pub fn non_equigenerated_gap_family(q: usize) -> Result<MonomialIdeal> {
    if q == 0 {
        let ring = Ring::new(&["x", "y"])?;
        return MonomialIdeal::parse(&ring, "x, y^2");
    }
    let names: Vec<String> = (1..=q).map(|i| format!("x{i}")).chain((1..=q).map(|i| format!("y{i}"))).collect();
    let ring = Ring::new(&names)?;
    let mut u1 = vec![0; 2 * q];
    let mut u2 = vec![0; 2 * q];
    for i in 0..q {
        u1[i] = 2;
        u2[q + i] = 3;
    }
    MonomialIdeal::new(&ring, vec![Monomial::new(u1), Monomial::new(u2)])
}
